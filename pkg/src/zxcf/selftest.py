"""End-to-end self checks: the correctness machinery run as one command."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .canonical import canonicalize, decompile, enumerate_zxcf, is_valid, strip_locals, to_json
from .circuit import synthesize_encoder
from .codes import CODES, code, cyclic_invariant, is_cube, output_sectors, sector_signature
from .counting import CountQuery, count_tableaus, count_zxcf_closed, count_zxcf_recursive
from .graphform import (
    LEGAL_SIX,
    GraphForm,
    enforce_hadamard_rule,
    local_complement,
    normalize_local,
    pivot_phi,
    push_paulis,
)
from .oracle import (
    circuit_to_isometry,
    graph_state,
    image_rank,
    images_equal,
    states_equal,
    tableau_projector,
    zxcf_to_isometry,
)
from .sampling import random_tableau, regenerate
from .tableau import groups_equal


@dataclass
class SelfTestConfig:
    max_n: int = 3  # exhaustive bijection bound
    fuzz_n: int = 6
    trials: int = 100
    seed: int = 0
    count_n: int = 20


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""
    seconds: float = 0.0
    failures: list = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.detail} ({self.seconds:.2f}s)"


def check_bijection(max_n: int) -> CheckResult:
    bad = []
    total = 0
    for n in range(max_n + 1):
        for k in range(n + 1):
            seen = set()
            cnt = 0
            for d in enumerate_zxcf(n, k):
                cnt += 1
                if not is_valid(d):
                    bad.append(("invalid", n, k, to_json(d)))
                    continue
                seen.add(decompile(d))
            expect = count_tableaus(n, k)
            total += cnt
            if cnt != expect or len(seen) != expect:
                bad.append(("count", n, k, cnt, len(seen), expect))
    return CheckResult("bijection", not bad, f"{total} diagrams for n <= {max_n}", failures=bad)


def check_counting(max_n: int) -> CheckResult:
    bad = []
    for n in range(max_n + 1):
        for k in range(n + 1):
            q = CountQuery(n, k)
            vals = (count_tableaus(n, k), count_zxcf_recursive(q), count_zxcf_closed(q))
            if len(set(vals)) != 1:
                bad.append((n, k, vals))
    return CheckResult("counting", not bad, f"n <= {max_n}", failures=bad)


def _random_nk(rng: random.Random, max_n: int) -> tuple[int, int]:
    n = rng.randint(1, max_n)
    return n, rng.randint(0, n)


def check_roundtrip(cfg: SelfTestConfig, rng: random.Random) -> CheckResult:
    bad = []
    for _ in range(cfg.trials):
        t = random_tableau(*_random_nk(rng, cfg.fuzz_n), rng)
        d = canonicalize(t)
        if not is_valid(d) or not groups_equal(decompile(d), t):
            bad.append(("roundtrip", str(t)))
        t2 = regenerate(t, rng)
        if to_json(canonicalize(t2)) != to_json(d):
            bad.append(("determinism", str(t), str(t2)))
    return CheckResult("roundtrip", not bad, f"{cfg.trials} tableaus, n <= {cfg.fuzz_n}", failures=bad)


def check_oracle(cfg: SelfTestConfig, rng: random.Random) -> CheckResult:
    bad = []
    cases = [code(name) for name in CODES if code(name).n <= 6]
    cases += [random_tableau(*_random_nk(rng, cfg.fuzz_n), rng) for _ in range(cfg.trials)]
    for t in cases:
        proj = tableau_projector(t)
        if not images_equal(zxcf_to_isometry(canonicalize(t)), proj):
            bad.append(("zxcf", str(t)))
        if not images_equal(circuit_to_isometry(synthesize_encoder(t)), proj):
            bad.append(("circuit", str(t)))
    return CheckResult("oracle", not bad, f"{len(cases)} cases", failures=bad)


def random_graph(m: int, rng: random.Random, locals_=LEGAL_SIX) -> GraphForm:
    edges = [(u, v) for u in range(m) for v in range(u + 1, m) if rng.random() < 0.5]
    return GraphForm.from_edges(m, edges, [rng.choice(locals_) for _ in range(m)])


def rewrite_failures(g: GraphForm) -> list[tuple[str, tuple]]:
    """Every rewrite applicable to ``g`` that changes its dense state."""
    ref = graph_state(g)
    bad = []

    def same(name, h, *where):
        if not states_equal(ref, graph_state(h)):
            bad.append((name, where))

    for v in range(g.m):
        same("local_complement", local_complement(g, v), v)
        same("normalize_local", normalize_local(g, v), v)
    for u, v in g.edges():
        same("pivot_phi", pivot_phi(g, u, v), u, v)
    same("push_paulis", push_paulis(g))
    if g.is_legal:
        same("enforce_hadamard_rule", enforce_hadamard_rule(g))
    return bad


def check_rewrites(cfg: SelfTestConfig, rng: random.Random) -> CheckResult:
    bad = []
    for _ in range(cfg.trials):
        g = random_graph(rng.randint(1, cfg.fuzz_n), rng)
        bad += [(str(g), f) for f in rewrite_failures(g)]
    return CheckResult("rewrites", not bad, f"{cfg.trials} random graphs", failures=bad)


def check_codes() -> CheckResult:
    bad = []
    for name in CODES:
        t = code(name)
        d = canonicalize(t)
        if not is_valid(d) or not images_equal(zxcf_to_isometry(d), tableau_projector(t)):
            bad.append((name, "image"))
        s = strip_locals(d)
        if not is_valid(s) or image_rank(zxcf_to_isometry(s)) != 2 ** (d.n - d.k):
            bad.append((name, "strip_locals"))
    shor = canonicalize(code("shor"))
    sectors = output_sectors(shor)
    if len(sectors) != 3 or len({sector_signature(shor, s) for s in sectors}) != 1:
        bad.append(("shor", "sectors"))
    if not is_cube(canonicalize(code("steane"))):
        bad.append(("steane", "cube"))
    if not cyclic_invariant(canonicalize(code("five"))):
        bad.append(("five", "cyclic"))
    return CheckResult("codes", not bad, ", ".join(CODES), failures=bad)


def run_selftest(cfg: SelfTestConfig) -> list[CheckResult]:
    rng = random.Random(cfg.seed)
    jobs = [
        lambda: check_bijection(cfg.max_n),
        lambda: check_counting(cfg.count_n),
        lambda: check_roundtrip(cfg, rng),
        lambda: check_oracle(cfg, rng),
        lambda: check_rewrites(cfg, rng),
        check_codes,
    ]
    results = []
    for job in jobs:
        t0 = time.perf_counter()
        r = job()
        r.seconds = time.perf_counter() - t0
        results.append(r)
    return results
