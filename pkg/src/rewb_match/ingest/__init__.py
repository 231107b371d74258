"""Subject input for the command line."""

from .subject_loader import load_subject, read_subject_file, trim_newlines

__all__ = ["load_subject", "read_subject_file", "trim_newlines"]
