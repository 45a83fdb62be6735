from intensity_distortion.file_rw.readers import read_metric_csv, read_profile_file
from intensity_distortion.file_rw.writers import (
    write_metric_csv,
    write_profile_file,
    write_table_csv,
)

__all__ = [
    "read_metric_csv",
    "read_profile_file",
    "write_metric_csv",
    "write_profile_file",
    "write_table_csv",
]
