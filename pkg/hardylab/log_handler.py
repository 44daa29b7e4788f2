import logging

BLUE = "\x1b[1;34m"
GREEN = "\x1b[32m"
BOLD_GREEN = "\x1b[1;32m"
YELLOW = "\x1b[33;20m"
BOLD_YELLOW = "\x1b[33;1m"
RED = "\x1b[31;20m"
BOLD_RED = "\x1b[31;1m"
RESET = "\x1b[0m"


class CustomFormatter(logging.Formatter):
    """
    Colors the time and level preamble of each record, and the whole message
    for warnings and errors.
    """

    # level -> (time color, level color, message color)
    styles = {
        logging.DEBUG: (GREEN, "", ""),
        logging.INFO: (GREEN, BOLD_GREEN, ""),
        logging.WARNING: (YELLOW, BOLD_YELLOW, YELLOW),
        logging.ERROR: (RED, BOLD_RED, RED),
        logging.CRITICAL: (RED, BOLD_RED, BOLD_RED),
    }

    def __init__(self):
        super().__init__()
        self.formatters = {
            level: logging.Formatter(
                f"{time}%(asctime)s{RESET}{label} %(levelname)-8s{RESET}"
                f"{message}%(message)s{RESET}"
            )
            for level, (time, label, message) in self.styles.items()
        }

    def format(self, record):
        formatter = self.formatters.get(record.levelno, self.formatters[logging.INFO])
        return formatter.format(record)


class HighlitingFilter(logging.Filter):
    """Colors the leading keyword of a message by how good the news is."""

    colors = {
        "progress": BLUE,
        "good": BOLD_GREEN,
        "suspect": BOLD_YELLOW,
        # Reported as warnings: plain red is restored after the token
        "bad": BOLD_RED,
    }
    patterns = {
        "VIOLATION": "bad",
        "FAILED": "bad",
        "UNASSIGNED": "suspect",
        "SKIPPED": "suspect",
        "HOLDS": "good",
        "ASSIGNED": "good",
        "VERIFIED": "good",
        "EVOLVING": "progress",
        "ENUMERATING": "progress",
        "BOOSTING": "progress",
        "LOADING": "progress",
    }

    def filter(self, record):
        record.msg = self.highlight(record.msg)
        return True

    def highlight(self, msg):
        msg = str(msg)
        keyword, sep, rest = msg.partition(" ")
        if (category := self.patterns.get(keyword)) is None:
            return msg
        tail = RED if category == "bad" else ""
        return f"{self.colors[category]}{keyword}{RESET}{tail}{sep}{rest}"


logger = logging.getLogger("hardylab")
defaultStreamHandler = logging.StreamHandler()
formatter = logging.Formatter(
    fmt="%(asctime)s.%(msecs)03d %(levelname)-8s %(message)s",
    datefmt="%Y-%m-%d %H:%M:%S",
)
defaultStreamHandler.setFormatter(formatter)
logger.addHandler(defaultStreamHandler)
logger.setLevel(logging.INFO)
logger.propagate = False
