"""Free-group shadows of curves and disk-bounding tests.

A simple closed curve on the 2m-punctured sphere determines a conjugacy
class in the free group on x_1..x_2m (one generator per puncture).  Braid
generators act by Artin substitutions; the class is kept as a cyclically
reduced word.  A curve bounds a disk in the ball on one side of the
bridge sphere iff its class dies in the quotient that glues the puncture
pairs of that side's trivial tangle, which for the cap pairing
{p_2k-1, p_2k} is the map x_2k-1 -> g_k, x_2k -> g_k^-1 into the free
group on g_1..g_m.

Letters are nonzero ints: +i for x_i, -i for its inverse.  Word images
under long braid words grow exponentially, so callers cap the tracked
length (see curves.DualCurve).
"""


class WordTooLong(RuntimeError):
    pass


def free_reduce(letters):
    out = []
    for a in letters:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return out


def cyclic_reduce(letters):
    w = free_reduce(letters)
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return w


class CyclicWord:
    """Cyclically reduced conjugacy-class representative."""

    __slots__ = ("n", "letters")

    def __init__(self, n, letters):
        self.n = n
        self.letters = tuple(cyclic_reduce(list(letters)))

    @staticmethod
    def round_curve(n, a, b):
        return CyclicWord(n, list(range(a, b + 1)))

    def __len__(self):
        return len(self.letters)

    def __repr__(self):
        return f"CyclicWord({list(self.letters)})"

    def apply_gen(self, k, sign, cap=None):
        """Artin action of the half twist swapping punctures k, k+1."""
        if not (1 <= k <= self.n - 1):
            raise ValueError("generator index out of range")
        out = []
        for a in self.letters:
            i = abs(a)
            if i == k:
                sub = [k, k + 1, -k] if sign > 0 else [k + 1]
            elif i == k + 1:
                sub = [k] if sign > 0 else [-(k + 1), k, k + 1]
            else:
                sub = [i]
            if a < 0:
                sub = [-x for x in reversed(sub)]
            out.extend(sub)
            if cap is not None and len(out) > 3 * cap:
                raise WordTooLong(f"word image exceeds cap {cap}")
        w = CyclicWord(self.n, out)
        if cap is not None and len(w) > cap:
            raise WordTooLong(f"word image exceeds cap {cap}")
        return w

    def apply_word(self, word, cap=None):
        w = self
        for k, s in word:
            w = w.apply_gen(k, s, cap=cap)
        return w

    def exponent_parity_punctures(self):
        """Punctures whose total exponent is odd (abelianized class)."""
        par = [0] * (self.n + 1)
        for a in self.letters:
            par[abs(a)] ^= 1
        return frozenset(i for i in range(1, self.n + 1) if par[i])

    def bounds_disk_cap_side(self):
        """True iff the class dies under the cap pairing x_2k-1 x_2k ~ 1.

        This is the bounding test for the handlebody obtained by gluing
        disks along the cap arcs joining p_2k-1 to p_2k; it applies to the
        tangle below P_1 and, with the same pairing, to the one above P_n.
        """
        img = []
        for a in self.letters:
            i = abs(a)
            g = (i + 1) // 2
            s = 1 if i % 2 == 1 else -1
            img.append(g * s * (1 if a > 0 else -1))
        return len(free_reduce(img)) == 0
