"""File formats, report rendering, CLI and HTTP service."""
