from .parser import (BraceLaw, GroupLaw, parse, parse_bracelaw_file, parse_grouplaw_file,
                     read_law_source, format_bracelaw, format_grouplaw)
from .numeric import (NumericTensor, check_brace_numeric, check_group_numeric, extract_bracket,
                      extract_triangle, lambda_numeric, newton_inverse, rationalize, rationalize_value)

__all__ = [
    "BraceLaw",
    "GroupLaw",
    "NumericTensor",
    "check_brace_numeric",
    "check_group_numeric",
    "extract_bracket",
    "extract_triangle",
    "format_bracelaw",
    "format_grouplaw",
    "lambda_numeric",
    "newton_inverse",
    "parse",
    "parse_bracelaw_file",
    "parse_grouplaw_file",
    "rationalize",
    "rationalize_value",
    "read_law_source",
]
