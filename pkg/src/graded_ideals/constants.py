EXIT_OK = 0
EXIT_PARSE_ERROR = 2
EXIT_PRECONDITION = 3
EXIT_CAP_EXCEEDED = 4

CORPUS_PRESET_NAMES = ("small", "default", "large")

STATUS_VERIFIED = "verified"
STATUS_FALSIFIED = "falsified"
STATUS_VACUOUS = "vacuous"
