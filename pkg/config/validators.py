from django.core.validators import RegexValidator


COXETER_FACTOR_PATTERN = r"(?:A[1-9]\d*|B(?:[2-9]|[1-9]\d+)|D(?:[4-9]|[1-9]\d+)|E[678]|F4|H[34]|I2\((?:[3-9]|[1-9]\d+)\))"
COXETER_TYPE_PATTERN = rf"^{COXETER_FACTOR_PATTERN}(?:x{COXETER_FACTOR_PATTERN})*$"
COXETER_TYPE_ERROR = (
    "Enter a Coxeter type such as A3, B4xA1, H3 or I2(7): factors A(n>=1), B(n>=2), "
    "D(n>=4), E6-E8, F4, H3, H4 or I2(m>=3), joined by 'x'."
)

coxeter_type_validator = RegexValidator(
    regex=COXETER_TYPE_PATTERN,
    message=COXETER_TYPE_ERROR,
)


ORDER_SEQUENCE_PATTERN = r"^\d+(?:[ ,]+\d+)*$"
ORDER_ERROR = "Enter default, simples-last, paper-a3 or a comma separated permutation of 1..N."

order_sequence_validator = RegexValidator(
    regex=ORDER_SEQUENCE_PATTERN,
    message=ORDER_ERROR,
)


WORD_PATTERN = r"^\d+(?:[ ,]+\d+)*$"
WORD_ERROR = "Enter a word as whitespace or comma separated reflection positions."

word_validator = RegexValidator(
    regex=WORD_PATTERN,
    message=WORD_ERROR,
)
