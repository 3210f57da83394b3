"""Deterministic, seedable randomness with independent per-replicate substreams.

Everything downstream of a seed is reproducible bit for bit, on any platform,
in any language willing to reimplement two public-domain recurrences (all
arithmetic modulo 2**64).

splitmix64 mixing function ``mix64`` (Steele/Lea/Flood, via Vigna's
``splitmix64.c``)::

    x ^= x >> 30;  x *= 0xBF58476D1CE4E5B9
    x ^= x >> 27;  x *= 0x94D049BB133111EB
    x ^= x >> 31

xoshiro256** step (Blackman & Vigna)::

    out = rotl64(s1 * 5, 7) * 9
    t  = s1 << 17
    s2 ^= s0;  s3 ^= s1;  s1 ^= s2;  s0 ^= s3;  s2 ^= t
    s3 = rotl64(s3, 45)

A generator's four state words are derived from a 64-bit key as
``s[i] = mix64(key + (i + 1) * 0x9E3779B97F4A7C15)`` for i = 0..3.
``SeededGenerator(seed)`` uses the seed itself as the key;
``substream(seed, index)`` uses ``mix64(mix64(seed) + index)``, which is
injective in ``index`` for a fixed seed, so distinct replicate indices get
pairwise-distinct streams.

Derived draws:

* ``random()`` -- ``(next_uint64() >> 11) * 2**-53``, uniform on [0, 1).
* ``below(n)`` -- rejection sampling: draw ``r`` until
  ``r < 2**64 - (2**64 mod n)``, then return ``r mod n``.  No modulo bias;
  every call consumes at least one draw.
* ``shuffle`` -- forward Fisher-Yates: for i = 0..len-2 swap position i with
  position ``i + below(len - i)``.
* sampling without replacement -- the first k positions after k forward
  Fisher-Yates steps.

Replicated experiments take replicate r's randomness from
``substream(seed, r)`` so results never depend on execution order or thread
scheduling.  ``SubstreamBlock`` steps a contiguous block of substreams in
lockstep with numpy and reproduces, lane by lane, exactly the scalar
sequences (see the equivalence tests).
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1
_SPAN = 1 << 64
_GOLDEN = 0x9E3779B97F4A7C15
_MIX_C1 = 0xBF58476D1CE4E5B9
_MIX_C2 = 0x94D049BB133111EB

# below() accepts 1 <= n < 2**63 so results always fit a signed 64-bit int.
_MAX_BELOW = 1 << 63


def mix64(x: int) -> int:
    """splitmix64 finalizer: a 64-bit avalanche bijection."""
    x &= _MASK64
    x ^= x >> 30
    x = (x * _MIX_C1) & _MASK64
    x ^= x >> 27
    x = (x * _MIX_C2) & _MASK64
    x ^= x >> 31
    return x


def _state_words(key: int) -> list[int]:
    return [mix64((key + i * _GOLDEN) & _MASK64) for i in range(1, 5)]


class SeededGenerator:
    """xoshiro256** generator; identical seed means identical sequence."""

    def __init__(self, seed: int = 0):
        self.seed = seed
        self.stream_index: int | None = None
        self._s = _state_words(seed & _MASK64)

    @classmethod
    def _from_key(cls, key: int, seed: int, index: int) -> "SeededGenerator":
        gen = cls.__new__(cls)
        gen.seed = seed
        gen.stream_index = index
        gen._s = _state_words(key)
        return gen

    def next_uint64(self) -> int:
        s0, s1, s2, s3 = self._s
        out = (_rotl64((s1 * 5) & _MASK64, 7) * 9) & _MASK64
        t = (s1 << 17) & _MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = _rotl64(s3, 45)
        self._s = [s0, s1, s2, s3]
        return out

    def random(self) -> float:
        """Uniform float on [0, 1) with 53 random bits."""
        return (self.next_uint64() >> 11) * 2.0**-53

    def below(self, n: int) -> int:
        """Uniform integer on [0, n) by rejection sampling (no modulo bias)."""
        if not 1 <= n < _MAX_BELOW:
            raise ValueError(f"below() needs 1 <= n < 2**63, got {n}")
        limit = _SPAN - _SPAN % n
        while True:
            r = self.next_uint64()
            if r < limit:
                return r % n

    def shuffle(self, items) -> list:
        """Return a new uniformly shuffled list (forward Fisher-Yates)."""
        out = list(items)
        n = len(out)
        for i in range(n - 1):
            j = i + self.below(n - i)
            out[i], out[j] = out[j], out[i]
        return out

    def sample_without_replacement(self, items, k: int) -> list:
        """First k positions of a partial forward Fisher-Yates shuffle."""
        out = list(items)
        n = len(out)
        if not 0 <= k <= n:
            raise ValueError(f"cannot sample {k} of {n} items without replacement")
        for i in range(min(k, n - 1)):
            j = i + self.below(n - i)
            out[i], out[j] = out[j], out[i]
        return out[:k]

    def draw_with_replacement(self, items, k: int) -> list:
        """k independent uniform picks from items (repeats possible)."""
        pool = list(items)
        if not pool:
            raise ValueError("cannot draw from an empty item list")
        if k < 1:
            raise ValueError(f"draw count must be >= 1, got {k}")
        n = len(pool)
        return [pool[self.below(n)] for _ in range(k)]


def _rotl64(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK64


def substream_key(seed: int, index: int) -> int:
    """64-bit key for replicate ``index`` of ``seed``; injective per seed."""
    return mix64((mix64(seed) + index) & _MASK64)


def substream(seed: int, index: int) -> SeededGenerator:
    """Independent generator for replicate ``index`` of ``seed``.

    A pure function of (seed, index): unaffected by how many other
    substreams exist or how far they have been consumed.
    """
    if index < 0:
        raise ValueError(f"substream index must be >= 0, got {index}")
    return SeededGenerator._from_key(substream_key(seed, index), seed, index)


class SubstreamBlock:
    """Lockstep numpy engine over substreams seed/start .. seed/start+count-1.

    Lane ``i`` of the block produces exactly the sequence of
    ``substream(seed, start + i)``, including rejection redraws, so
    vectorized and one-replicate-at-a-time execution give identical results.
    """

    def __init__(self, seed: int, count: int, start: int = 0):
        if count < 1:
            raise ValueError(f"block needs at least one lane, got {count}")
        base = np.uint64(mix64(seed))
        keys = _mix64_array(base + np.arange(start, start + count, dtype=np.uint64))
        self._s = [
            _mix64_array(keys + np.uint64((i * _GOLDEN) & _MASK64))
            for i in range(1, 5)
        ]
        self.count = count

    def _step(self, active: np.ndarray | None = None) -> np.ndarray:
        # Lanes outside `active` keep their state: a lane's stream position
        # depends only on its own draw history.
        s0, s1, s2, s3 = self._s
        x = s1 * np.uint64(5)
        out = ((x << np.uint64(7)) | (x >> np.uint64(57))) * np.uint64(9)
        n2 = s2 ^ s0
        n3 = s3 ^ s1
        n1 = s1 ^ n2
        n0 = s0 ^ n3
        n2 = n2 ^ (s1 << np.uint64(17))
        n3 = (n3 << np.uint64(45)) | (n3 >> np.uint64(19))
        if active is None:
            self._s = [n0, n1, n2, n3]
        else:
            self._s = [
                np.where(active, new, old)
                for new, old in zip((n0, n1, n2, n3), (s0, s1, s2, s3))
            ]
        return out

    def next_uint64(self) -> np.ndarray:
        """Advance every lane once; returns a uint64 array."""
        return self._step()

    def random(self) -> np.ndarray:
        return (self.next_uint64() >> np.uint64(11)) * 2.0**-53

    def below(self, n: int, active: np.ndarray | None = None) -> np.ndarray:
        """Per-lane uniform integer on [0, n); advances only `active` lanes.

        Entries for inactive lanes are meaningless and must be ignored.
        """
        if not 1 <= n < _MAX_BELOW:
            raise ValueError(f"below() needs 1 <= n < 2**63, got {n}")
        out = self._step(active)
        result = out % np.uint64(n)
        rem = _SPAN % n
        if rem:
            limit = np.uint64(_SPAN - rem)
            rejected = out >= limit
            if active is not None:
                rejected &= active
            rounds = 0
            while rejected.any():
                rounds += 1
                if rounds > 128:  # pragma: no cover - P(reject) <= n/2**64 per round
                    raise RuntimeError("rejection sampling failed to terminate")
                out = self._step(rejected)
                result = np.where(rejected, out % np.uint64(n), result)
                rejected &= out >= limit
        return result.astype(np.int64)


def _mix64_array(x: np.ndarray) -> np.ndarray:
    x = x.astype(np.uint64, copy=True)
    x ^= x >> np.uint64(30)
    x *= np.uint64(_MIX_C1)
    x ^= x >> np.uint64(27)
    x *= np.uint64(_MIX_C2)
    x ^= x >> np.uint64(31)
    return x
