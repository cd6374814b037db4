"""Reference u-law companding oracle, derived independently of the package.

Builds the decoder table by enumerating (sign, segment, mantissa) cells and
taking each cell's midpoint, and encodes by scanning the segment decision
boundaries. Used to cross-check the production codec on every input.
"""

BIAS = 33
CLIP = 8158
SEG_UPPER = [0x3F, 0x7F, 0xFF, 0x1FF, 0x3FF, 0x7FF, 0xFFF, 0x1FFF]


def ref_decode_table() -> list[int]:
    table = [0] * 256
    for sign in (0, 1):
        for seg in range(8):
            for mant in range(16):
                octet = ~((sign << 7) | (seg << 4) | mant) & 0xFF
                step = 1 << (seg + 1)
                cell_low = (0x20 << seg) + mant * step
                value = cell_low + step // 2 - BIAS
                table[octet] = -value if sign else value
    return table


def ref_segment(magnitude: int) -> int:
    """Segment index 0..7 of a clamped magnitude."""
    biased = min(magnitude, CLIP) + BIAS
    for seg, upper in enumerate(SEG_UPPER):
        if biased <= upper:
            return seg
    raise AssertionError(f"magnitude {magnitude} outside the companding range")


def ref_encode(linear: int) -> int:
    sign = linear < 0
    magnitude = min(-linear if sign else linear, CLIP)
    biased = magnitude + BIAS
    seg = ref_segment(magnitude)
    mant = (biased - (0x20 << seg)) // (1 << (seg + 1))
    return ~((0x80 if sign else 0) | (seg << 4) | mant) & 0xFF


def ref_error_bound(linear: int) -> int:
    """Per-segment quantizer step bound: 2^(segment+1)."""
    return 1 << (ref_segment(abs(linear)) + 1)
