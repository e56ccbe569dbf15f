import sys
import traceback


class Debugger:
    """
    Channel-gated logger. Every message goes to stderr so that stdout only
    carries command output.
    """

    def __init__(self, enable_log=False, enable_warn=False, enable_error=False):
        self.enable_log = enable_log
        self.enable_warn = enable_warn
        self.enable_error = enable_error

    def log(self, message: str):
        if self.enable_log:
            print(f"[DEBUG]: {message}", file=sys.stderr)

    def warning(self, message: str):
        if self.enable_warn:
            print(f"[WARNING]: {message}", file=sys.stderr)

    def error(self, message: str, with_stack: bool = False):
        if self.enable_error:
            if with_stack:
                format_traceback: str = "\n".join(traceback.format_stack())
                print(
                    f"[ERROR]: {message}\n From: \n{format_traceback}",
                    file=sys.stderr,
                )
            else:
                print(f"[ERROR]: {message}", file=sys.stderr)

    def enable_all(self):
        """
        Switch on every channel, used by --verbose.
        """
        self.enable_log = True
        self.enable_warn = True
        self.enable_error = True
