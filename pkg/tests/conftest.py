import sys

# Large searches render thousand-digit values; lift the int/str guard once.
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(max(sys.get_int_max_str_digits(), 50000))
