"""Hopf structure maps, the Hopf pairing, and the two-sided action engine.

The double acts on the tensor algebra from both sides.  All sixteen
generator-on-letter cases reduce to four closed forms per side built from
coproducts, antipodes and the pairing; everything else follows by the
module-algebra rule g(uv) = g_(1)(u) g_(2)(v) (and its right-handed mirror)
peeling one letter at a time, with memo tables keyed by (generator, word).

The letter-level table is computed, never transcribed: the printed table
shipped in TABLE_ROWS below exists only as a cross-check fixture for
verify_action_tables, which reports any disagreement together with the
engine's derived value.  Five fixture rows are tagged suspected_typo (four
duplicated row labels and one copy-paste value); the checker never silently
corrects them.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .scalars import ONE, QRat, ZERO
from .ncpoly import (
    A, B, C, CQSL2, D, DOUBLE, E, F, HXC, K, KI, UQSL2,
    C_LETTERS, H_LETTERS, LETTERS, LETTER_NAMES,
    nc_add_into, nc_scale, nc_unit,
)


def _q(k):
    return QRat.q_power(k)


# generator coproducts; entries (left leg word, right leg word, coefficient)
COPRODUCT = {
    E: (((E,), (K,), ONE), ((), (E,), ONE)),
    F: (((F,), (), ONE), ((KI,), (F,), ONE)),
    K: (((K,), (K,), ONE),),
    KI: (((KI,), (KI,), ONE),),
    A: (((A,), (A,), ONE), ((B,), (C,), ONE)),
    B: (((A,), (B,), ONE), ((B,), (D,), ONE)),
    C: (((C,), (A,), ONE), ((D,), (C,), ONE)),
    D: (((C,), (B,), ONE), ((D,), (D,), ONE)),
}

COUNIT = {E: ZERO, F: ZERO, K: ONE, KI: ONE, A: ONE, B: ZERO, C: ZERO, D: ONE}

ANTIPODE = {
    E: {(E, KI): -ONE},
    F: {(K, F): -ONE},
    K: {(KI,): ONE},
    KI: {(K,): ONE},
    A: {(D,): ONE},
    B: {(B,): -_q(1)},
    C: {(C,): -_q(-1)},
    D: {(A,): ONE},
}

# nonzero pairing values on generator pairs (function letter, enveloping letter)
GEN_PAIR = {
    (A, K): _q(1), (D, K): _q(-1),
    (A, KI): _q(-1), (D, KI): _q(1),
    (B, E): ONE, (C, F): ONE,
}


def counit(p):
    """Counit, extended multiplicatively; accepts a Word or an NCPoly."""
    if isinstance(p, tuple):
        p = {p: ONE}
    acc = ZERO
    for w, coeff in p.items():
        val = coeff
        for x in w:
            val = val * COUNIT[x]
            if val.is_zero():
                break
        acc = acc + val
    return acc


def _word_counit(w):
    val = ONE
    for x in w:
        val = val * COUNIT[x]
        if val.is_zero():
            return ZERO
    return val


def coproduct(x, pres):
    """Multiplicative extension of the generator coproducts.

    x is a Word or NCPoly over pres's alphabet; both legs are normalized in
    pres.  Returns a TensorPoly: dict {(word, word): QRat}.
    """
    if isinstance(x, tuple):
        x = {x: ONE}
    out = {}
    for w, coeff in x.items():
        t = {((), ()): ONE}
        for letter in w:
            new = {}
            for (u1, u2), c in t.items():
                for l1, l2, cl in COPRODUCT[letter]:
                    c0 = c * cl
                    for x1, c1 in pres.nf_word(u1 + l1).items():
                        cc1 = c0 * c1
                        for x2, c2 in pres.nf_word(u2 + l2).items():
                            key = (x1, x2)
                            s = new.get(key)
                            v = cc1 * c2
                            s = v if s is None else s + v
                            if s.is_zero():
                                new.pop(key, None)
                            else:
                                new[key] = s
            t = new
        for key, c in t.items():
            v = out.get(key)
            v = c * coeff if v is None else v + c * coeff
            if v.is_zero():
                out.pop(key, None)
            else:
                out[key] = v
    return out


def _cop2_letter(g):
    """Degree-two coproduct legs of a single letter: list of
    (word1, word2, word3, coeff) with words of length <= 1."""
    out = []
    for u1, u2, c in COPRODUCT[g]:
        if not u1:
            out.append(((), (), u2, c))
            continue
        for t1, t2, c2 in COPRODUCT[u1[0]]:
            out.append((t1, t2, u2, c * c2))
    return out


def antipode(x, which):
    """Antipode of a pure enveloping-side ('H') or function-side ('C') element.

    Anti-homomorphism: letters map through ANTIPODE, words reverse.
    """
    pres = UQSL2 if which == "H" else CQSL2
    if isinstance(x, tuple):
        x = {x: ONE}
    out = {}
    for w, coeff in x.items():
        acc = nc_unit()
        for letter in reversed(w):
            acc = pres.mul(acc, ANTIPODE[letter])
        nc_add_into(out, acc, coeff)
    return out


# -- the Hopf pairing --

_pair_cache = {}


def _pair_words(cw, hw):
    if not cw:
        return _word_counit(hw)
    if not hw:
        return _word_counit(cw)
    key = (cw, hw)
    val = _pair_cache.get(key)
    if val is not None:
        return val
    if len(hw) == 1:
        h = hw[0]
        if len(cw) == 1:
            val = GEN_PAIR.get((cw[0], h), ZERO)
        else:
            head, rest = (cw[0],), cw[1:]
            val = ZERO
            for l1, l2, cl in COPRODUCT[h]:
                lft = _pair_words(head, l1)
                if lft.is_zero():
                    continue
                val = val + cl * lft * _pair_words(rest, l2)
    else:
        head, rest = (hw[0],), hw[1:]
        val = ZERO
        for (w1, w2), c in coproduct(cw, CQSL2).items():
            lft = _pair_words(w1, head)
            if lft.is_zero():
                continue
            val = val + c * lft * _pair_words(w2, rest)
    _pair_cache[key] = val
    return val


def pairing(c, h):
    """Hopf pairing of a function-algebra element against an enveloping
    element; bilinear over Q(q)."""
    if isinstance(c, tuple):
        c = {c: ONE}
    if isinstance(h, tuple):
        h = {h: ONE}
    acc = ZERO
    for cw, cc in c.items():
        for hw, hc in h.items():
            v = _pair_words(cw, hw)
            if not v.is_zero():
                acc = acc + cc * hc * v
    return acc


# -- letter-level actions (the four closed forms per side) --

def _inject_c(p):
    """View a function-algebra polynomial inside the tensor algebra."""
    return dict(p)


def _mix(hpoly, cpoly):
    """Product (H part) * (C part) inside the tensor algebra; concatenation
    of normal words is already normal."""
    out = {}
    for hw, hc in hpoly.items():
        for cw, cc in cpoly.items():
            c = hc * cc
            if not c.is_zero():
                out[hw + cw] = c
    return out


def _slash_right(x, cword):
    """h <| c = h_(2) phi(c, h_(1)) for a single enveloping letter x."""
    acc = {}
    for l1, l2, cl in COPRODUCT[x]:
        v = cl * _pair_words(cword, l1)
        if not v.is_zero():
            nc_add_into(acc, {l2: ONE}, v)
    return acc


def _slash_left(x, hword):
    """c |> h on the function side: c_(2) phi(c_(1), h) for a single letter x."""
    acc = {}
    for l1, l2, cl in COPRODUCT[x]:
        v = cl * _pair_words(l1, hword)
        if not v.is_zero():
            nc_add_into(acc, {l2: ONE}, v)
    return acc


def _left_on_letter(g, x):
    """Left action of a double generator g on a single tensor-algebra letter."""
    if g in H_LETTERS:
        if x in H_LETTERS:
            return nc_scale({(x,): ONE}, COUNIT[g])
        # h acts on a function letter through the pairing on the right leg
        acc = {}
        for l1, l2, cl in COPRODUCT[x]:
            v = cl * _pair_words(l2, (g,))
            if not v.is_zero():
                nc_add_into(acc, {l1: ONE}, v)
        return acc
    if x in H_LETTERS:
        # c |> h = (h <| c_(2)) S(c_(1)) c_(3)
        acc = {}
        for t1, t2, u3, cl in _cop2_letter(g):
            hpart = _slash_right(x, t2)
            if not hpart:
                continue
            cpart = CQSL2.mul(antipode(t1, "C"), {u3: ONE})
            nc_add_into(acc, _mix(hpart, cpart), cl)
        return acc
    # c |> cbar = S(c_(1)) cbar c_(2)
    acc = {}
    for l1, l2, cl in COPRODUCT[g]:
        p = CQSL2.mul(CQSL2.mul(antipode(l1, "C"), {(x,): ONE}), {l2: ONE})
        nc_add_into(acc, p, cl)
    return acc


def _right_on_letter(x, g):
    """Right action of a double generator g on a single letter."""
    if g in H_LETTERS:
        if x in H_LETTERS:
            # hbar <| h = S(h_(1)) hbar h_(2)
            acc = {}
            for l1, l2, cl in COPRODUCT[g]:
                p = UQSL2.mul(UQSL2.mul(antipode(l1, "H"), {(x,): ONE}),
                              {l2: ONE})
                nc_add_into(acc, p, cl)
            return acc
        # cbar <| h = S(h_(1)) h_(3) (cbar <- h_(2))
        acc = {}
        for t1, t2, u3, cl in _cop2_letter(g):
            cpart = _slash_left(x, t2)
            if not cpart:
                continue
            hpart = UQSL2.mul(antipode(t1, "H"), {u3: ONE})
            nc_add_into(acc, _mix(hpart, cpart), cl)
        return acc
    if x in H_LETTERS:
        # hbar <| c = hbar_(1) phi(c, hbar_(2))
        acc = {}
        for l1, l2, cl in COPRODUCT[x]:
            v = cl * _pair_words((g,), l2)
            if not v.is_zero():
                nc_add_into(acc, {l1: ONE}, v)
        return acc
    return nc_scale({(x,): ONE}, COUNIT[g])


@dataclass(frozen=True)
class GenActionTable:
    left: dict   # (generator, letter) -> NCPoly, tensor-algebra normal form
    right: dict  # (letter, generator) -> NCPoly


_table = None


def gen_action_table():
    global _table
    if _table is None:
        left = {}
        right = {}
        for g in LETTERS:
            for x in LETTERS:
                left[(g, x)] = HXC.normal_form(_left_on_letter(g, x))
                right[(x, g)] = HXC.normal_form(_right_on_letter(x, g))
        _table = GenActionTable(left, right)
    return _table


# -- extension to arbitrary tensor-algebra elements --

_left_cache = {}
_right_cache = {}


def _act_left_word(g, w):
    """Left action of a single generator on a normal word; memoised."""
    if not w:
        return nc_unit(COUNIT[g])
    key = (g, w)
    val = _left_cache.get(key)
    if val is not None:
        return val
    if len(w) == 1:
        val = gen_action_table().left[(g, w[0])]
    else:
        head, rest = w[:1], w[1:]
        val = {}
        for l1, l2, cl in COPRODUCT[g]:
            p1 = ({head: ONE} if not l1 else _act_left_word(l1[0], head))
            if not p1:
                continue
            p2 = ({rest: ONE} if not l2 else _act_left_word(l2[0], rest))
            if not p2:
                continue
            nc_add_into(val, HXC.mul(p1, p2), cl)
    _left_cache[key] = val
    return val


def _act_right_word(w, g):
    """Right action of a single generator on a normal word; memoised."""
    if not w:
        return nc_unit(COUNIT[g])
    key = (w, g)
    val = _right_cache.get(key)
    if val is not None:
        return val
    if len(w) == 1:
        val = gen_action_table().right[(w[0], g)]
    else:
        head, rest = w[:1], w[1:]
        val = {}
        for l1, l2, cl in COPRODUCT[g]:
            p1 = ({head: ONE} if not l1 else _act_right_word(head, l1[0]))
            if not p1:
                continue
            p2 = ({rest: ONE} if not l2 else _act_right_word(rest, l2[0]))
            if not p2:
                continue
            nc_add_into(val, HXC.mul(p1, p2), cl)
    _right_cache[key] = val
    return val


def act_left(x, v):
    """Left action of a double element x on a tensor-algebra element v.

    A word x = g1 g2 ... gn acts by g1 acting last:
    (xy)(v) = x(y(v)).
    """
    if isinstance(x, tuple):
        x = {x: ONE}
    if isinstance(v, tuple):
        v = {v: ONE}
    acc = {}
    for xw, xc in x.items():
        cur = v
        for g in reversed(xw):
            nxt = {}
            for w, c in cur.items():
                nc_add_into(nxt, _act_left_word(g, w), c)
            cur = nxt
        nc_add_into(acc, cur, xc)
    return acc


def act_right(v, x):
    """Right action: v <| (xy) = (v <| x) <| y."""
    if isinstance(x, tuple):
        x = {x: ONE}
    if isinstance(v, tuple):
        v = {v: ONE}
    acc = {}
    for xw, xc in x.items():
        cur = v
        for g in xw:
            nxt = {}
            for w, c in cur.items():
                nc_add_into(nxt, _act_right_word(w, g), c)
            cur = nxt
        nc_add_into(acc, cur, xc)
    return acc


# -- printed-table fixture and its audit --

def _w(s):
    """Compact word literal: one char per letter, I stands for K^-1."""
    m = {"E": E, "F": F, "K": K, "I": KI,
         "a": A, "b": B, "c": C, "d": D}
    return tuple(m[ch] for ch in s)


def _p(*terms):
    out = {}
    for coeff, word in terms:
        nc_add_into(out, {_w(word): ONE}, coeff)
    return out


_one = ONE
_lam = (_q(1) - _q(-1)).inverse()

# the printed generator-on-letter table, transcribed as written (words kept in
# the printed letter order; comparison normalizes both sides).  Fields:
# (side, actor, target, value); side "L" means actor acts from the left on
# target, "R" means target is acted on from the right by actor.
TABLE_ROWS = [
    # enveloping generators on enveloping letters: counit scaling
    ("L", E, E, _p()), ("L", E, F, _p()), ("L", E, K, _p()), ("L", E, KI, _p()),
    ("L", F, E, _p()), ("L", F, F, _p()), ("L", F, K, _p()), ("L", F, KI, _p()),
    ("L", K, E, _p((_one, "E"))), ("L", K, F, _p((_one, "F"))),
    ("L", K, K, _p((_one, "K"))), ("L", K, KI, _p((_one, "I"))),
    ("L", KI, E, _p((_one, "E"))), ("L", KI, F, _p((_one, "F"))),
    ("L", KI, K, _p((_one, "K"))), ("L", KI, KI, _p((_one, "I"))),
    # enveloping generators on function letters
    ("L", E, A, _p()), ("L", E, B, _p((_one, "a"))),
    ("L", E, C, _p()), ("L", E, D, _p((_one, "c"))),
    ("L", F, A, _p((_one, "b"))), ("L", F, B, _p()),
    ("L", F, C, _p((_one, "d"))), ("L", F, D, _p()),
    ("L", K, A, _p((_q(1), "a"))), ("L", K, B, _p((_q(-1), "b"))),
    ("L", K, C, _p((_q(1), "c"))), ("L", K, D, _p((_q(-1), "d"))),
    ("L", KI, A, _p((_q(-1), "a"))), ("L", KI, B, _p((_q(1), "b"))),
    ("L", KI, C, _p((_q(-1), "c"))), ("L", KI, D, _p((_q(1), "d"))),
    # function generators on enveloping letters
    ("L", A, E, _p((_one, "E"), (_q(1), "Kcd"))),
    ("L", A, F, _p((_q(-1), "F"), (-_q(1), "ba"), (_one - _q(2), "Fbc"))),
    ("L", A, K, _p((_q(1), "K"), (_q(2) - _one, "Kbc"))),
    ("L", A, KI, _p((_q(-1), "I"), (_one - _q(2), "Ibc"))),
    ("L", B, E, _p((_one, "Kdd"))),
    ("L", B, F, _p((-_q(1), "bb"), (_one - _q(2), "Fbd"))),
    ("L", B, K, _p((_q(2) - _one, "Kbd"))),
    ("L", B, KI, _p((_one - _q(2), "Ibd"))),
    ("L", C, E, _p((-_q(-1), "Kcc"))),
    ("L", C, F, _p((_one, "aa"), (_q(1) - _q(-1), "Fac"))),
    ("L", C, K, _p((_q(-1) - _q(1), "Kac"))),
    ("L", C, KI, _p((_q(1) - _q(-1), "Iac"))),
    ("L", D, E, _p((_one, "E"), (-_q(-1), "Kcd"))),
    ("L", D, F, _p((_q(1), "F"), (_one, "ab"), (_one - _q(-2), "Fbc"))),
    ("L", D, K, _p((_q(-1), "K"), (_q(-2) - _one, "Kbc"))),
    ("L", D, KI, _p((_q(1), "I"), (_one - _q(-2), "Ibc"))),
    # function generators on function letters
    ("L", A, A, _p((_one, "a"), (_q(1) - _one, "bca"))),
    ("L", A, B, _p((_q(1), "b"), (_q(2) - _q(1), "bbc"))),
    ("L", A, C, _p((_q(1), "c"), (_q(2) - _q(1), "bcc"))),
    ("L", A, D, _p((_one, "d"), (_q(1) - _one, "dbc"))),
    ("L", B, A, _p((_one - _q(1), "b"), (_q(1) - _one, "bbc"))),
    ("L", B, B, _p((_one - _q(-1), "dbb"))),
    ("L", B, C, _p((_one - _q(-1), "dcb"))),
    ("L", B, D, _p((_one - _q(-1), "ddb"))),
    ("L", C, A, _p((_one - _q(1), "aac"))),
    ("L", C, B, _p((_one - _q(1), "abc"))),
    ("L", C, C, _p((_one - _q(1), "acc"))),
    ("L", C, D, _p((_one - _q(-1), "c"), (_q(-1) - _one, "bcc"))),
    ("L", D, A, _p((_one, "a"), (_q(-1) - _one, "abc"))),
    ("L", D, B, _p((_q(-1), "b"), (_q(-2) - _q(-1), "bbc"))),
    ("L", D, C, _p((_q(-1), "c"), (_q(-2) - _q(-1), "bcc"))),
    ("L", D, D, _p((_one, "d"), (_q(-1) - _one, "bcd"))),
    # enveloping letters acted on from the right by enveloping generators
    ("R", E, E, _p((_one - _q(-2), "EE"))),
    ("R", E, F, _p((_one - _q(2), "EF"), (-_lam, "K"), (_lam, "I"))),
    ("R", E, K, _p((_q(2) - _one, "EK"))),
    ("R", E, KI, _p((_q(-2) - _one, "EI"))),
    ("R", F, E, _p((_lam, "KK"), (-_lam, "KI"))),
    ("R", F, F, _p()),
    ("R", F, K, _p((_one - _q(2), "KKF"))),
    ("R", F, KI, _p((_one - _q(-2), "F"))),
    ("R", K, E, _p((_q(-2), "E"))), ("R", K, F, _p((_q(2), "F"))),
    ("R", K, K, _p((_one, "K"))), ("R", K, KI, _p((_one, "I"))),
    ("R", KI, E, _p((_q(2), "E"))), ("R", KI, F, _p((_q(-2), "F"))),
    ("R", KI, K, _p((_one, "K"))), ("R", KI, KI, _p((_one, "I"))),
    # function letters acted on from the right by enveloping generators
    ("R", E, A, _p((_one - _q(1), "Ea"), (_one, "Kc"))),
    ("R", E, B, _p((_one - _q(1), "Eb"), (_one, "Kd"))),
    ("R", E, C, _p((_one - _q(-1), "Ec"))),
    ("R", F, A, _p((_q(-1) - _one, "KFa"))),
    ("R", F, B, _p((_q(-1) - _one, "KFb"))),
    ("R", F, C, _p((_q(1) - _one, "KFc"), (_one, "Ka"))),
    ("R", K, A, _p((_q(1), "a"))), ("R", K, B, _p((_q(1), "b"))),
    ("R", K, C, _p((_q(-1), "c"))),
    ("R", KI, A, _p((_q(-1), "a"))), ("R", KI, B, _p((_q(-1), "b"))),
    ("R", KI, C, _p((_q(1), "c"))),
    # enveloping letters acted on from the right by function generators
    ("R", A, E, _p((_q(1), "E"))), ("R", A, F, _p((_one, "F"))),
    ("R", A, K, _p((_q(1), "K"))), ("R", A, KI, _p((_q(-1), "I"))),
    ("R", B, E, _p((_one, ""))), ("R", B, F, _p()),
    ("R", B, K, _p()), ("R", B, KI, _p()),
    ("R", C, E, _p()), ("R", C, F, _p((_one, "I"))),
    ("R", C, K, _p()), ("R", C, KI, _p()),
    ("R", D, E, _p((_q(-1), "E"))), ("R", D, F, _p((_one, "F"))),
    ("R", D, K, _p((_q(-1), "K"))), ("R", D, KI, _p((_q(1), "I"))),
    # function letters acted on from the right by function generators
    ("R", A, A, _p((_one, "a"))), ("R", A, B, _p((_one, "b"))),
    ("R", A, C, _p((_one, "c"))), ("R", A, D, _p((_one, "d"))),
    ("R", B, A, _p()), ("R", B, B, _p()), ("R", B, C, _p()), ("R", B, D, _p()),
    ("R", C, A, _p()), ("R", C, B, _p()), ("R", C, C, _p()), ("R", C, D, _p()),
    ("R", D, A, _p((_one, "a"))), ("R", D, B, _p((_one, "b"))),
    ("R", D, C, _p((_one, "c"))),
]

# rows printed with a duplicated label or a copied value; each entry:
# (side, actor, target-as-printed, value-as-printed, presumed actor, presumed
# target, reason).  These stay out of TABLE_ROWS so the clean rows audit green;
# verify_action_tables reports them separately with the engine's derivation.
SUSPECT_ROWS = [
    ("R", E, C, _p((_one - _q(-1), "Ed")), E, D,
     "row label repeats the previous line; value matches the d column"),
    ("R", F, C, _p((_q(1) - _one, "KFd"), (_one, "Kb")), F, D,
     "row label repeats the previous line; value matches the d column"),
    ("R", K, C, _p((_q(-1), "d")), K, D,
     "row label repeats the previous line; value matches the d column"),
    ("R", KI, C, _p((_q(1), "d")), KI, D,
     "row label repeats the previous line; value matches the d column"),
    ("R", D, D, _p((_one, "c")), D, C,
     "value looks copied from the line above (c acted by d); "
     "counit scaling gives d"),
]


@dataclass
class TableRow:
    side: str
    actor: int
    target: int
    claimed: dict
    derived: dict
    match: bool
    suspect: bool = False
    presumed_actor: int | None = None
    presumed_target: int | None = None
    presumed_match: bool | None = None
    note: str = ""

    def label(self):
        if self.side == "L":
            return "%s |> %s" % (LETTER_NAMES[self.actor],
                                 LETTER_NAMES[self.target])
        return "%s <| %s" % (LETTER_NAMES[self.target],
                             LETTER_NAMES[self.actor])


@dataclass
class TableReport:
    rows: list = field(default_factory=list)

    @property
    def mismatches(self):
        return [r for r in self.rows if not r.match and not r.suspect]

    @property
    def suspects(self):
        return [r for r in self.rows if r.suspect]

    @property
    def passed(self):
        return (not self.mismatches
                and all(r.presumed_match for r in self.suspects))


def verify_action_tables():
    """Audit the printed table against the computed engine, never correcting.

    Clean rows must match exactly; tagged rows are reported with the engine's
    value for the printed label and for the presumed intended label.
    """
    table = gen_action_table()
    report = TableReport()
    for side, actor, target, claimed in TABLE_ROWS:
        derived = (table.left[(actor, target)] if side == "L"
                   else table.right[(target, actor)])
        claimed_nf = HXC.normal_form(claimed)
        report.rows.append(TableRow(
            side, actor, target, claimed_nf, derived,
            claimed_nf == derived))
    for side, actor, target, claimed, p_actor, p_target, note in SUSPECT_ROWS:
        derived = (table.left[(actor, target)] if side == "L"
                   else table.right[(target, actor)])
        claimed_nf = HXC.normal_form(claimed)
        presumed = (table.left[(p_actor, p_target)] if side == "L"
                    else table.right[(p_target, p_actor)])
        presumed_match = claimed_nf == presumed
        report.rows.append(TableRow(
            side, actor, target, claimed_nf, derived,
            claimed_nf == derived, suspect=True,
            presumed_actor=p_actor, presumed_target=p_target,
            presumed_match=presumed_match, note=note))
    return report
