"""Named verification suites.  Each suite yields CheckResult records."""
from __future__ import annotations

import hashlib
import itertools
import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

import numpy as np

from . import characters as ch
from . import class_products as cp
from . import cycle_statistics as cs
from . import derangement_lab as dl
from . import linear_strata as ls
from . import lusztig_symbols as sy
from .errors import SizeGuardExceeded, UnknownSuite
from .perm import AN, SN, Permutation, cycle_type, group_order, is_derangement, num_cycles


@dataclass
class CheckResult:
    check: str
    group: str
    params: dict
    expected: object
    actual: object
    passed: bool
    runtime_ms: int = 0
    seed: int = 0
    skipped: bool = False
    reason: str = ""

    def to_dict(self) -> dict:
        d = {"check": self.check, "group": self.group, "params": self.params,
             "expected": _plain(self.expected), "actual": _plain(self.actual),
             "pass": self.passed, "runtime_ms": self.runtime_ms, "seed": self.seed}
        if self.skipped:
            d["skipped"] = True
            d["reason"] = self.reason
        return d


def _plain(v):
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else str(v)
    if isinstance(v, float):
        return round(v, 12)
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, (set, frozenset)):
        return sorted(_plain(x) for x in v)
    if isinstance(v, (np.integer,)):
        return int(v)
    return v


def derive_seed(root: int, name: str) -> int:
    digest = hashlib.sha256(f"{root}:{name}".encode()).hexdigest()
    return int(digest[:12], 16)


@dataclass
class Config:
    seed: int = 0
    max_n: int | None = None
    qs: tuple[int, ...] | None = None
    timings: bool = False

    def cap(self, default: int, hard: int | None = None) -> int:
        """--max-n overrides the desk-fast default, never exceeding ``hard``."""
        n = default if self.max_n is None else self.max_n
        return n if hard is None else min(n, hard)

    def q_list(self, default) -> list[int]:
        return list(default) if self.qs is None else [q for q in default if q in self.qs] or list(self.qs)


class Runner:
    """Collects results, timing each check and turning size guards into skips."""

    def __init__(self, cfg: Config):
        self.cfg = cfg

    def run(self, name: str, group: str, params: dict, fn: Callable) -> CheckResult:
        seed = derive_seed(self.cfg.seed, f"{name}:{group}:{sorted(params.items())}")
        start = time.perf_counter()
        try:
            expected, actual, ok = fn(random.Random(seed))
            res = CheckResult(name, group, params, expected, actual, bool(ok), seed=seed)
        except SizeGuardExceeded as exc:
            res = CheckResult(name, group, params, None, None, True, seed=seed,
                              skipped=True, reason=str(exc))
        if self.cfg.timings:
            res.runtime_ms = int((time.perf_counter() - start) * 1000)
        return res


SUITES: dict[str, Callable[[Runner], Iterator[CheckResult]]] = {}


def suite(name: str):
    def deco(fn):
        SUITES[name] = fn
        return fn
    return deco


def run_suite(name: str, cfg: Config | None = None) -> list[CheckResult]:
    cfg = cfg or Config()
    runner = Runner(cfg)
    if name == "all":
        return [r for key in SUITES for r in SUITES[key](runner)]
    if name not in SUITES:
        raise UnknownSuite(name)
    return list(SUITES[name](runner))


def _label(n: int, kind: str) -> str:
    return f"{kind[0]}{n}"


# -- characters ---------------------------------------------------------------------

@suite("sym-char-orthogonality")
def _sym_char(run: Runner):
    for n in range(1, run.cfg.cap(10) + 1):
        def check(rng, n=n):
            t = ch.sn_character_table(n)
            hooks_ok = all(d == ch.degree_hook_formula(lam)
                           for d, lam in zip(t.degrees, ch.partitions_list(n)))
            sq = sum(d * d for d in t.degrees)
            return math.factorial(n), sq, t.check_orthogonality() and hooks_ok and sq == math.factorial(n)
        yield run.run("sn-orthogonality", _label(n, SN), {"n": n}, check)
    for n in range(1, run.cfg.cap(10) + 1):
        def check(rng, n=n):
            t = ch.an_character_table(n)
            sq = sum(d * d for d in t.degrees)
            return t.order, sq, t.check_orthogonality() and sq == t.order
        yield run.run("an-orthogonality", _label(n, AN), {"n": n}, check)


@suite("twelve-characters")
def _twelve(run: Runner):
    for n in range(10, max(run.cfg.cap(14), 10) + 1):
        def check(rng, n=n):
            rows = ch.classify_nonvanishing_pair(n, (n - 3, 3), (n - 4, 4))
            prods = sorted({a * b for _, a, b in rows})
            return 12, len(rows), len(rows) == 12 and set(prods) <= {-1, 1}
        yield run.run("twelve-characters", _label(n, SN), {"n": n}, check)


@suite("unipotent-degree-bound")
def _adegree(run: Runner):
    for q in run.cfg.q_list((2, 3)):
        for n in range(1, run.cfg.cap(12) + 1):
            for L in range(0, 4):
                if n <= 2 * L:
                    continue
                def check(rng, n=n, L=L, q=q):
                    rep = ch.verify_adegree_bound(n, L, q)
                    return True, rep.passed, rep.passed
                yield run.run("adegree-bound", f"GL{n}({q})", {"n": n, "L": L, "q": q}, check)


# -- class products -------------------------------------------------------------------

FROB_GROUPS = [(3, SN), (4, SN), (5, SN), (4, AN), (5, AN), (6, AN)]


@suite("frobenius-bruteforce")
def _frobenius(run: Runner):
    for n, kind in FROB_GROUPS:
        if n > run.cfg.cap(6):
            continue
        def check(rng, n=n, kind=kind):
            G = cp.perm_group(n, kind)
            k = len(G.classes)
            bad = 0
            for a, b, c in itertools.product(range(k), repeat=3):
                f = cp.frobenius_count(G.table, cp.FactorizationQuery((a, b), c))
                bf = cp.bruteforce_count(n, kind, [G.class_members[a], G.class_members[b]],
                                         G.representative(c))
                bad += f != bf
            return 0, bad, bad == 0
        yield run.run("frobenius-vs-bruteforce", _label(n, kind), {"triples": "all"}, check)


@suite("class-cover")
def _cover(run: Runner):
    for n, kind in [(5, SN), (5, AN), (6, AN)]:
        if n > run.cfg.cap(6):
            continue
        G = cp.perm_group(n, kind)
        for a in range(len(G.classes)):
            for b in range(a, len(G.classes)):
                def check(rng, G=G, a=a, b=b):
                    rep = cp.class_product_cover(G.table, a, b)
                    brute = {G.class_of(x) for x in cp.product_set(G.class_members[a], G.class_members[b])}
                    labels = sorted(G.classes[i].label for i in rep.classes)
                    return sorted(G.classes[i].label for i in brute), labels, set(rep.classes) == brute
                yield run.run("class-cover", G.label,
                              {"c1": G.classes[a].label, "c2": G.classes[b].label}, check)


def _bnp_configs():
    s4 = cp.perm_group(4, SN)
    s5 = cp.perm_group(5, SN)
    a5 = cp.perm_group(5, AN)
    nonid = lambda G: [g for g in G.elements if g != G.identity]  # noqa: E731
    largest = sorted(range(len(a5.classes)), key=lambda i: -a5.classes[i].class_size)[:3]
    yield "S4", s4, [nonid(s4)] * 3, "G minus e"
    yield "S4", s4, [list(s4.elements)] * 3, "C_i = G"
    yield "S5", s5, [nonid(s5)] * 3, "G minus e"
    yield "A5", a5, [a5.class_members[i] for i in largest], "three largest classes"
    yield "A5", a5, [nonid(a5)] * 4, "G minus e, t=4"


@suite("bnp-inequality")
def _bnp(run: Runner):
    for label, G, subsets, desc in _bnp_configs():
        if G.n > run.cfg.cap(5):
            continue
        def check(rng, G=G, subsets=subsets):
            rep = cp.bnp_bound_check(G, subsets)
            return True, {"alpha": rep.alpha, "max_dev": rep.max_deviation, "E": rep.expected}, rep.passed
        yield run.run("bnp-bound", label, {"subsets": desc, "t": len(subsets)}, check)
    for n, kind in [(4, SN), (5, SN), (5, AN)]:
        if n > run.cfg.cap(5):
            continue
        def check(rng, n=n, kind=kind):
            G = cp.perm_group(n, kind)
            k = len(G.classes)
            fails = 0
            worst = 0.0
            for c1, c2, c3 in itertools.combinations_with_replacement(range(k), 3):
                for g in range(k):
                    rep = cp.triple_class_uniform_bound(G.table, c1, c2, c3, g)
                    fails += not rep.passed or rep.lhs > rep.rhs_scaled + 1e-12
                    if rep.rhs:
                        worst = max(worst, rep.lhs / rep.rhs)
            return 0, fails, fails == 0
        yield run.run("triple-class-uniform", _label(n, kind), {"triples": "all"}, check)


@suite("gowers")
def _gowers(run: Runner):
    if run.cfg.cap(5) < 5:
        return
    def check(rng):
        G = cp.perm_group(5, AN)
        fails = hyp = 0
        for _ in range(100):
            sets = [cp.random_subset(G, rng.randint(42, 60), rng) for _ in range(3)]
            rep = cp.gowers_check(G, *sets)
            hyp += rep.hypothesis
            fails += not rep.passed
        return 0, {"counterexamples": fails, "hypothesis_met": hyp}, fails == 0
    yield run.run("gowers-random-triples", "A5", {"trials": 100, "sizes": [42, 60]}, check)

    def trivial(rng):
        G = cp.perm_group(5, AN)
        e = [G.identity]
        full = cp.gowers_check(G, G.elements, G.elements, G.elements)
        tiny = cp.gowers_check(G, e, e, e)
        return [True, False], [full.covers, tiny.hypothesis], full.covers and not tiny.hypothesis
    yield run.run("gowers-extremes", "A5", {}, trivial)


@suite("witten-zeta")
def _zeta(run: Runner):
    def s3(rng):
        v = cp.witten_zeta(ch.sn_character_table(3), 1)
        return Fraction(5, 2), v, v == Fraction(5, 2)
    yield run.run("zeta-value", "S3", {"s": 1}, s3)

    def a5(rng):
        want = 1 + Fraction(2, 9) + Fraction(1, 16) + Fraction(1, 25)
        v = cp.witten_zeta(ch.an_character_table(5), 2)
        return want, v, v == want
    yield run.run("zeta-value", "A5", {"s": 2}, a5)
    for n in range(1, run.cfg.cap(8) + 1):
        def count(rng, n=n):
            t = ch.sn_character_table(n)
            z0, zm2 = cp.witten_zeta(t, 0), cp.witten_zeta(t, -2)
            return [len(t), t.order], [z0, zm2], z0 == len(t) and zm2 == t.order
        yield run.run("zeta-zero-and-minus-two", _label(n, SN), {"s": [0, -2]}, count)


@suite("word-images")
def _words(run: Runner):
    cases = [
        ("x", [(0, 1)], 3, SN, "all"),
        ("x^2", [(0, 1), (0, 1)], 3, SN, ["1,1,1", "3"]),
        ("[x,y]", [(0, -1), (1, -1), (0, 1), (1, 1)], 5, AN, "all"),
        ("x^2", [(0, 1), (0, 1)], 5, SN, None),
        ("[x,y]", [(0, -1), (1, -1), (0, 1), (1, 1)], 4, SN, None),
        ("x y x^-1 x", [(0, 1), (1, 1), (0, -1), (0, 1)], 4, SN, "all"),
    ]
    for name, word, n, kind, want in cases:
        if n > run.cfg.cap(5):
            continue
        def check(rng, word=word, n=n, kind=kind, want=want):
            G = cp.perm_group(n, kind)
            img = cp.word_image(word, G)
            labels = sorted(G.classes[i].label for i in img.member_classes)
            if want is None:
                # oracle: squares / commutators built directly
                if len(cp.free_reduce(word)) == 2:
                    direct = {G.class_of(g * g) for g in G.elements}
                else:
                    direct = {G.class_of(x.inverse() * y.inverse() * x * y)
                              for x in G.elements for y in G.elements}
                expect = sorted(G.classes[i].label for i in direct)
            elif want == "all":
                expect = sorted(c.label for c in G.classes)
            else:
                expect = sorted(want)
            return expect, labels, labels == expect
        yield run.run("word-image", _label(n, kind), {"word": name}, check)


# -- cycle statistics -------------------------------------------------------------------

@suite("cycle-mod-counts")
def _cycle_counts(run: Runner):
    for n in range(1, run.cfg.cap(8) + 1):
        for kind in (SN, AN):
            def check(rng, n=n, kind=kind):
                from collections import Counter
                from .perm import enumerate_group
                hist = Counter(num_cycles(g) for g in enumerate_group(n, kind))
                bad = 0
                for m in range(1, 10):
                    for a in range(m):
                        brute = sum(c for k, c in hist.items() if (k - a) % m == 0)
                        bad += brute != cs.count_p_mod(n, m, a, kind)
                return 0, bad, bad == 0
            yield run.run("count-p-mod", _label(n, kind), {"m": "1..9"}, check)
    for m in (3, 5, 7):
        def trend(rng, m=m):
            d10, d30 = cs.equidistribution_defect(10, m), cs.equidistribution_defect(30, m)
            return "n=30 below n=10", [float(d10), float(d30)], d30 < d10
        yield run.run("equidistribution-trend", "Sn", {"m": m}, trend)


@suite("rising-factorial")
def _rising(run: Runner):
    for m in (1, 3, 5, 7):
        def check(rng, m=m):
            bad = [n for n in range(0, 13) if not cs.rising_factorial_identity_check(n, m).passed]
            return [], bad, not bad
        yield run.run("rising-factorial-identity", "Sn", {"m": m, "n": "0..12"}, check)


@suite("alt-threecycle-gap")
def _alt_gap(run: Runner):
    for n, m, k, l in [(7, 7, 2, 4), (8, 9, 2, 4)]:
        if n > run.cfg.cap(8):
            continue
        def check(rng, n=n, m=m, k=k, l=l):
            rep = cs.three_cycle_gap_check(cs.build_alt_sets(n, m, k, l))
            return 0, {"three_cycles": rep.three_cycles_in_product, "S": rep.s_size, "T": rep.t_size}, rep.passed
        yield run.run("no-three-cycle", _label(n, AN), {"m": m, "k": k, "l": l}, check)

    def pdiff(rng):
        ok = cs.p_difference_exhaustive(6)
        return True, ok, ok
    yield run.run("p-difference", "A6", {}, pdiff)


@suite("split-type-bound")
def _split(run: Runner):
    def brute(rng):
        from .perm import enumerate_group
        bad = []
        for n in range(1, run.cfg.cap(8) + 1):
            direct = sum(1 for g in enumerate_group(n, SN)
                         if all(p % 2 for p in cycle_type(g)) and len(set(cycle_type(g))) == len(cycle_type(g)))
            if direct != cs.count_split_type(n):
                bad.append(n)
        return [], bad, not bad
    yield run.run("split-type-count", "Sn", {"n": f"1..{run.cfg.cap(8)}"}, brute)

    def bound(rng):
        bad = [n for n in range(10, 101)
               if Fraction(cs.count_split_type(n), math.factorial(n)) > 2 / math.log(n / 2)]
        return [], bad, not bad
    yield run.run("split-type-bound", "Sn", {"n": "10..100"}, bound)


# -- derangements -------------------------------------------------------------------------

@suite("derangement-asymptotics")
def _der_asym(run: Runner):
    top = run.cfg.cap(9)
    for n in range(4, top + 1):
        def check(rng, n=n):
            rep = dl.derangements(dl.GroupAction.natural(n))
            ie = dl.an_derangement_count(n)
            bon = dl.bonferroni_betweenness(n)
            return rep.count, ie, rep.count == ie and bon.passed
        yield run.run("an-derangement-count", _label(n, AN), {}, check)
    if top >= 9:
        def ratio(rng):
            delta = Fraction(dl.an_derangement_count(9), group_order(9, AN))
            r = dl.three_cycle_representation_ratio(9)
            ok = abs(float(delta) - 1 / math.e) <= 0.01 and abs(float(r) - math.e) <= 0.15
            return [1 / math.e, math.e], [float(delta), float(r)], ok
        yield run.run("derangement-asymptotics", "A9", {"tol": [0.01, 0.15]}, ratio)


@suite("an-two-derangements")
def _two_der(run: Runner):
    for n in range(5, run.cfg.cap(8, 9) + 1):
        def check(rng, n=n):
            bad = fallback = 0
            for g in cp.perm_group(n, AN).elements:
                d = dl.two_derangement_decompose(g, rng=rng)
                fallback += d.used_fallback
                bad += not dl._valid(g, d.d1, d.d2)
            return 0, {"invalid": bad, "fallback": fallback}, bad == 0
        yield run.run("decompose-exhaustive", _label(n, AN), {}, check)
    for n in (12, 14):
        def sample(rng, n=n):
            bad = fallback = 0
            for _ in range(2000):
                p = list(range(n))
                rng.shuffle(p)
                g = Permutation(p)
                if not g.is_even():
                    g = Permutation.from_cycles(n, [(0, 1)]) * g
                d = dl.two_derangement_decompose(g, rng=rng)
                fallback += d.used_fallback
                bad += not dl._valid(g, d.d1, d.d2)
            return 0, {"invalid": bad, "fallback": fallback}, bad == 0 and fallback == 0
        yield run.run("decompose-case-tree", _label(n, AN), {"samples": 2000}, sample)


@suite("d-squared")
def _d_squared(run: Runner):
    for n in range(5, run.cfg.cap(9) + 1):
        def check(rng, n=n):
            rep = dl.verify_d_squared(dl.GroupAction.natural(n))
            return 0, len(rep.gaps), rep.passed
        yield run.run("d-squared", _label(n, AN), {"action": "natural"}, check)
    for n in (6, 7):
        if n > run.cfg.cap(7):
            continue
        def check(rng, n=n):
            rep = dl.verify_d_squared(dl.GroupAction.k_subsets(n, 2))
            return 0, len(rep.gaps), rep.passed
        yield run.run("d-squared", _label(n, AN), {"action": "subsets:2"}, check)


@suite("ell-criterion")
def _ell(run: Runner):
    cases = [("natural", 7, 7), ("natural", 8, None), ("subsets:2", 7, 7), ("natural", 9, 9)]
    for action, n, want in cases:
        if n > run.cfg.cap(9):
            continue
        def check(rng, action=action, n=n, want=want):
            act = dl.GroupAction.natural(n) if action == "natural" else dl.GroupAction.k_subsets(n, 2)
            got = dl.derangement_ell_criterion(act)
            return want, got, got == want
        yield run.run("ell-criterion", _label(n, AN), {"action": action}, check)


@suite("mixing-l1")
def _mixing(run: Runner):
    def check(rng):
        vals = []
        for n in range(6, run.cfg.cap(9) + 1):
            G = cp.perm_group(n, AN)
            D = cp.NormalSubset.from_predicate(G, is_derangement)
            vals.append(cp.product_distribution_distance_exact(D, D)[0])
        ok = all(a > b for a, b in zip(vals, vals[1:]))
        return "strictly decreasing", [float(v) for v in vals], ok
    yield run.run("mixing-l1-trend", "An", {"n": f"6..{run.cfg.cap(9)}"}, check)


# -- linear strata ---------------------------------------------------------------------------

STRATA_CASES = [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)]


@suite("sl-strata")
def _strata(run: Runner):
    qs = run.cfg.q_list((2, 3))
    for n, q in STRATA_CASES:
        if q not in qs or n > run.cfg.cap(4):
            continue
        def check(rng, n=n, q=q):
            c = ls.stratum_census(n, q)
            return ls.sl_order(n, q), {"counts": c.counts}, c.passed
        yield run.run("stratum-census", f"SL{n}({q})", {"n": n, "q": q}, check)
    for n, q in [(3, 2), (3, 3), (4, 2)]:
        if q not in qs or n > run.cfg.cap(4):
            continue
        def sample(rng, n=n, q=q):
            bad = ls.intersection_bound_sample(n, q, 100_000, np.random.default_rng(rng.getrandbits(32)))
            return 0, bad, bad == 0
        yield run.run("fixed-space-intersection", f"SL{n}({q})", {"pairs": 100_000}, sample)


@suite("fixedq-transvection")
def _fixedq(run: Runner):
    for s, t in [(0, 2), (1, 3), (1, 2)]:
        if run.cfg.cap(4) < 4:
            continue
        def check(rng, s=s, t=t):
            rep = ls.fixed_q_product_check(4, 2, s, t)
            expected = 0 if rep.separation_ok else "not asserted"
            return expected, {"hits": rep.hits, "S": rep.s_fraction, "T": rep.t_fraction}, rep.passed
        yield run.run("fixedq-transvection", "SL4(2)", {"s": s, "t": t}, check)


@suite("gauss-binomial")
def _gauss(run: Runner):
    qs = run.cfg.q_list((2, 3, 4, 5, 7, 8, 9))
    def sandwich(rng):
        bad = [(k, m, q) for q in qs for k in range(11) for m in range(k + 1)
               if not ls.grass_sandwich(k, m, q)]
        return [], bad, not bad
    yield run.run("grass-sandwich", "Fq", {"k": "0..10", "q": qs}, sandwich)

    def duality(rng):
        bad = [(k, m, q) for q in (2, 3, 4, 5) for k in range(9) for m in range(k + 1)
               if ls.gaussian_binomial(k, m, q) != ls.gaussian_binomial(k, k - m, q)]
        return [], bad, not bad
    yield run.run("gauss-duality", "Fq", {"k": "0..8"}, duality)

    def subspaces(rng):
        F = ls.gf(2)
        vecs = [v for v in itertools.product(range(2), repeat=4) if any(v)]
        spans = {frozenset(ls._in_span_set([a, b], F)) for a, b in itertools.combinations(vecs, 2)}
        return ls.gaussian_binomial(4, 2, 2), len(spans), len(spans) == ls.gaussian_binomial(4, 2, 2)
    yield run.run("gauss-subspace-count", "F2^4", {"m": 2}, subspaces)


# -- symbols ----------------------------------------------------------------------------------

@suite("symbols-core")
def _sym_core(run: Runner):
    def rank_forms(rng):
        bad = sum(sy.rank_by_entries(s) != sy.rank_by_inefficiency(s) or sy.rank_by_entries(s) != r
                  for r in range(13) for s in sy.enumerate_symbols(r))
        return 0, bad, bad == 0
    yield run.run("rank-forms", "symbols", {"rank": "0..12"}, rank_forms)

    def removals(rng):
        bad = 0
        for r in range(9):
            for s in sy.enumerate_symbols(r):
                for d in range(1, r + 1):
                    for h in sy.hooks(s, d):
                        bad += sy.rank(sy.remove_hook(s, h)) != r - d
                    for h in sy.cohooks(s, d):
                        t = sy.remove_cohook(s, h)
                        bad += sy.rank(t) != r - d or abs(t.defect - s.defect) != 2
        return 0, bad, bad == 0
    yield run.run("removal-rank-drop", "symbols", {"rank": "0..8"}, removals)

    def bipartitions(rng):
        got = [len(sy.enumerate_symbols(r, lambda d: d == 1)) for r in range(13)]
        want = [sy.bipartition_count(r) for r in range(13)]
        return want, got, got == want
    yield run.run("defect-one-bipartitions", "symbols", {"rank": "0..12"}, bipartitions)

    for kind in (sy.HOOK, sy.COHOOK):
        for distinct in (True, False):
            def disjoint(rng, kind=kind, distinct=distinct):
                bad = sum(sy.disjoint_hook_violation(s, d, d2, kind, distinct)
                          for r in range(11) for s in sy.enumerate_symbols(r)
                          for d in range(1, r + 1) for d2 in range(1, r + 1))
                return 0, bad, bad == 0
            yield run.run("disjoint-hooks", "symbols",
                          {"rank": "0..10", "kind": kind, "distinct_tops": distinct}, disjoint)


BOUNDED_PAIRS = [(0, 1), (0, 2), (1, 2)]
KIND_PAIRS = [(sy.HOOK, sy.HOOK), (sy.COHOOK, sy.COHOOK), (sy.HOOK, sy.COHOOK), (sy.COHOOK, sy.HOOK)]


@suite("symbols-bounded")
def _sym_bounded(run: Runner):
    for k, k2 in BOUNDED_PAIRS:
        for a, b in KIND_PAIRS:
            def check(rng, k=k, k2=k2, a=a, b=b):
                counts = [sy.count_constrained(r, [(a, r - k), (b, r - k2)]) for r in range(12, 17)]
                return "constant", counts, len(set(counts)) == 1
            yield run.run("count-stabilizes", "symbols", {"k": k, "k2": k2, "kinds": [a, b]}, check)


def b_product2_expected(n: int) -> list:
    return [sy.minimal(sy.SymbolXY.of(x, y)) for x, y in [
        ([n], []), ([0, n], [1]), (list(range(n - 1)) + [n], range(1, n)),
        (range(n + 1), range(1, n + 1))]]


def b_product3_expected(n: int) -> list:
    return [sy.minimal(sy.SymbolXY.of(x, y)) for x, y in [
        ([n], []), ([1, n], [0]), (list(range(1, n - 1)) + [n], range(n)),
        (range(1, n + 1), range(n + 1))]]


@suite("symbols-classify")
def _sym_classify(run: Runner):
    for n in (6, 8, 10, 7, 9, 11):
        def check(rng, n=n):
            if n % 2 == 0:
                req = [(sy.COHOOK, n), (sy.HOOK, n - 1)]
                want = b_product2_expected(n)
                ells = (ls.zsygmondy_prime(2, 2 * n), ls.zsygmondy_prime(2, n - 1))
            else:
                req = [(sy.HOOK, n), (sy.COHOOK, n - 1)]
                want = b_product3_expected(n)
                ells = (ls.zsygmondy_prime(2, n), ls.zsygmondy_prime(2, 2 * n - 2))
            got = sy.classify_surviving_symbols(n, sy.ODD, req)
            by_ell = [s for s in sy.enumerate_symbols(n, sy.ODD)
                      if all(sy.denominator_divisible(s, 2, l) for l in ells)]
            key = lambda s: (s.x, s.y)  # noqa: E731
            ok = sorted(got, key=key) == sorted(want, key=key) == sorted(by_ell, key=key)
            return [s.to_json() for s in sorted(want, key=key)], [s.to_json() for s in sorted(got, key=key)], ok
        yield run.run("surviving-symbols", f"B{n}", {"n": n}, check)


SUITE_NAMES = list(SUITES)
