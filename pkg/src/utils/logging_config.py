"""
Logging configuration shared by the MCP server and the CLI.

Handlers write to stderr (and optionally a file) so stdout stays free for
the MCP stdio channel and for CLI output.
"""

import logging
import sys
from pathlib import Path
from typing import Optional, Union


LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def configure_logging(
    log_path: Optional[Union[str, Path]] = None,
    level: int = logging.INFO
) -> None:
    """
    Configure root logging once per process.

    Args:
        log_path: Optional log file; its parent directory is created
        level: Root log level
    """
    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]

    if log_path is not None:
        path = Path(log_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(path))

    logging.basicConfig(
        level=level,
        format=LOG_FORMAT,
        handlers=handlers,
        force=True
    )
