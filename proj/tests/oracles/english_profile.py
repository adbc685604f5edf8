"""Recomputes the English fixture profile (target 500, seed 7) standalone:
a pure-Python mt19937_64 picks the window offset with the same bounded draw
(rejection below the largest multiple of the range), then MWL/TTR/entropy are
evaluated by textstats_oracle on that window."""
import os
import sys

sys.path.insert(0, os.path.dirname(__file__))
import textstats_oracle as oracle  # noqa: E402

MASK = (1 << 64) - 1


class MT19937_64:
    def __init__(self, seed):
        self.mt = [0] * 312
        self.mt[0] = seed & MASK
        for i in range(1, 312):
            prev = self.mt[i - 1]
            self.mt[i] = (6364136223846793005 * (prev ^ (prev >> 62)) + i) & MASK
        self.index = 312

    def twist(self):
        for i in range(312):
            x = (self.mt[i] & 0xFFFFFFFF80000000) | (self.mt[(i + 1) % 312] & 0x7FFFFFFF)
            xa = x >> 1
            if x & 1:
                xa ^= 0xB5026F5AA96619E9
            self.mt[i] = self.mt[(i + 156) % 312] ^ xa
        self.index = 0

    def next(self):
        if self.index >= 312:
            self.twist()
        y = self.mt[self.index]
        self.index += 1
        y ^= (y >> 29) & 0x5555555555555555
        y ^= (y << 17) & 0x71D67FFFEDA60000
        y ^= (y << 37) & 0xFFF7EEE000000000
        y ^= y >> 43
        return y & MASK


def offset(n, target, seed):
    if n <= target:
        return 0
    rng = MT19937_64(seed)
    rng_range = n - target + 1
    limit = MASK - MASK % rng_range
    x = rng.next()
    while x >= limit:
        x = rng.next()
    return x % rng_range


def main(path, target=500, seed=7):
    with open(path, encoding="utf-8") as fh:
        toks = oracle.tokenize(fh.read())
    off = offset(len(toks), target, seed)
    win = toks[off:off + target]
    print(f"tokens_total {len(toks)}")
    print(f"offset {off}")
    print(f"token_count {len(win)}")
    print(f"mwl {oracle.mean_word_length(win)!r}")
    print(f"ttr {oracle.ttr(win)!r}")
    print(f"entropy {oracle.unigram_entropy(win)!r}")


if __name__ == "__main__":
    main(sys.argv[1])
