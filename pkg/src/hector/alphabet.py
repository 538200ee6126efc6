"""The 93-character output alphabet shared by passkey derivation and
random password generation.

The symbol block is every printable US-keyboard punctuation character
except the double quote, kept in its conventional ASCII order.  The full
alphabet is lowercase, uppercase, digits, then symbols; its layout is
frozen because derived passkeys index into it positionally.
"""

LOWER = "abcdefghijklmnopqrstuvwxyz"
UPPER = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
DIGITS = "0123456789"
SYMBOLS = "!#$%&'()*+,-./:;<=>?@[\\]^_`{|}~"

SYMBOL_LIST = LOWER + UPPER + DIGITS + SYMBOLS

assert len(SYMBOL_LIST) == 93
assert len(set(SYMBOL_LIST)) == 93
