"""Independent reference implementations used to fix expected test values.

passkey_oracle is a deliberately naive, straight-line transcription of
the five derivation steps (1-based indexing spelled out literally).  It
must stay independent of the hector package so that agreement between
the two is meaningful.
"""


def passkey_oracle(digit_seq, salt, m, k, dictionary, symbol_list):
    x0 = 0
    for j in range(1, 5):
        x0 = x0 + ord(salt[j - 1]) * 10 ** j

    l1 = len(digit_seq)
    l2 = len(dictionary)
    l3 = len(symbol_list)

    x1 = (m * x0 + k) % l2

    out = ""
    for i in range(1, l1 + 1):
        up = int(digit_seq[i - 1])
        d = ord(dictionary[(i - 1) % l2])
        out = out + symbol_list[(x1 + up + d) % l3]
    return out
