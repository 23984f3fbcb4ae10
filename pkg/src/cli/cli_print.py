import re
import sys
from enum import Enum


class ANSI(Enum):
    """ANSI escape codes for terminal formatting."""

    BOLD = "\033[1m"
    GREEN = "\033[32m"
    YELLOW = "\033[33m"
    RED = "\033[31m"
    VIOLET = "\033[35m"
    CYAN = "\033[36m"
    RESET = "\033[0m"
    UNDERLINE = "\033[4m"


def strip_ansi(text: str) -> str:
    return re.sub(r"\x1b\[[0-9;]*m", "", text)


class TerminalPrinter:
    """
    TerminalPrinter provides static methods for the command summaries of the workbench.
    It uses ANSI escape codes for color and formatting. Machine-readable error records go to stderr unformatted.
    """

    @staticmethod
    def print_headline(command: str, group: str | None = None):
        left = f"{ANSI.VIOLET.value}cayley-workbench{ANSI.RESET.value} | {ANSI.BOLD.value}{command}{ANSI.RESET.value}"
        if group:
            left += f" | Group: {ANSI.GREEN.value}{group}{ANSI.RESET.value}"
        print(left)
        print("-" * len(strip_ansi(left)))

    @staticmethod
    def print_title(title: str):
        print(f"{ANSI.VIOLET.value}{title}{ANSI.RESET.value}")

    @staticmethod
    def print_progress(msg: str):
        print(f"{ANSI.YELLOW.value}[Progress]{ANSI.RESET.value} {msg}")

    @staticmethod
    def print_result(result: str):
        print(f"{ANSI.BOLD.value}[Result]{ANSI.RESET.value} {result}")

    @staticmethod
    def print_artifact(path: str):
        print(f"  {ANSI.GREEN.value}- {path}{ANSI.RESET.value}")

    @staticmethod
    def print_flag(msg: str):
        print(f"{ANSI.YELLOW.value}[Flag]{ANSI.RESET.value} {msg}")

    @staticmethod
    def print_dry_run(msg: str):
        print(f"{ANSI.CYAN.value}[Dry run]{ANSI.RESET.value} {msg}")

    @staticmethod
    def print_error(msg: str):
        print(f"{ANSI.RED.value}[Error]{ANSI.RESET.value} {msg}", file=sys.stderr)

    @staticmethod
    def print_error_record(record: str):
        print(record, file=sys.stderr)
