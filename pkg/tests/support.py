"""Shared helpers for the test suite."""

import random
import struct

from hypothesis import strategies as st

from voicesms import AudioClip


def build_wav(samples, sample_rate=8000, bit_depth=16, channels=1) -> bytes:
    """Assemble a canonical RIFF/WAVE container by hand."""
    if bit_depth == 8:
        data = bytes((s + 128) & 0xFF for s in samples)
    else:
        data = b"".join(struct.pack("<h", s) for s in samples)
    block = channels * bit_depth // 8
    fmt = struct.pack(
        "<HHIIHH", 1, channels, sample_rate, sample_rate * block, block, bit_depth
    )
    body = b"WAVE"
    body += b"fmt " + struct.pack("<I", len(fmt)) + fmt
    body += b"data" + struct.pack("<I", len(data)) + data
    if len(data) % 2:
        body += b"\x00"
    return b"RIFF" + struct.pack("<I", len(body)) + body


def make_clip(n, seed=0, sample_rate=8000, bit_depth=16) -> AudioClip:
    """Deterministic pseudo-speech clip: full-range uniform noise."""
    rng = random.Random(seed)
    if bit_depth == 8:
        samples = [rng.randrange(-128, 128) for _ in range(n)]
    else:
        samples = [rng.randrange(-32768, 32768) for _ in range(n)]
    return AudioClip(sample_rate_hz=sample_rate, bit_depth=bit_depth, samples=samples)


def sample_values(bit_depth):
    if bit_depth == 8:
        return st.integers(min_value=-128, max_value=127)
    return st.integers(min_value=-32768, max_value=32767)


def clips(max_size=200, bit_depths=(8, 16)):
    return st.sampled_from(bit_depths).flatmap(
        lambda depth: st.builds(
            AudioClip,
            sample_rate_hz=st.sampled_from([8000, 16000, 44100]),
            bit_depth=st.just(depth),
            samples=st.lists(sample_values(depth), max_size=max_size),
        )
    )


def payload_points():
    """Any legal rendered payload scalar: 32..255 plus the shifted band."""
    return st.one_of(
        st.integers(min_value=32, max_value=255),
        st.integers(min_value=256, max_value=287),
    )
