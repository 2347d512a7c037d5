#!/usr/bin/env python
"""
CBI Verifier - Main Entry Point

Generates complementary Bannai-Ito polynomial tables and checks their
bispectral, orthogonality and algebraic identities in exact arithmetic.
"""
import logging
import sys
import traceback

from fs import FS
from logging_manager import LoggingManager
from errors import CbiError, VerificationFailure
from cbi_verifier import CbiVerifier


def print_message(message: str, message_type: str) -> None:
    """
    Prints a message with a specific type indicator.

    :param message: The message to print.
    :param message_type: The type of message ('positive', 'negative', 'info').
    """
    color_map = {
        'positive': '\033[92m*',  # Green
        'negative': '\033[91m*',  # Red
        'info': '\033[94m*'       # Blue
    }
    marker = color_map.get(message_type, '\033[94m*')
    print(f"\033[95m[ {marker} {message}\033[0m")


def main() -> None:
    """
    Sets up logging, runs one CLI command and exits with its code:
    0 pass, 1 verification failure, 2 usage or configuration error.
    """
    fs = FS()

    code = 0
    with LoggingManager(fs.logs_folder / "cbi_verifier.log"):
        try:
            app = CbiVerifier()
            code = app.run()
            print_message(app.summary, "positive" if code == 0 else "negative")
            if app.output_path is not None:
                print_message(f"Wrote {app.output_path}", "info")
        except VerificationFailure as e:
            logging.error(f"Verification failed: {e} witness={e.witness}")
            print_message(f"Verification failed: {e}", "negative")
            code = 1
        except CbiError as e:
            logging.error(f"Configuration error: {e}")
            print_message(f"Error: {e}", "negative")
            code = 2
        except Exception as e:
            logging.error(f"Unhandled exception: {e}")
            logging.error(traceback.format_exc())
            print_message(f"Error: {e}", "negative")
            code = 1
    sys.exit(code)


if __name__ == "__main__":
    main()
