"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
Sums are read and written as JSON; a bare graph is accepted wherever a
sum is expected and read as the single term with coefficient 1.
"""

import argparse
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from .cohomology import (BettiRow, betti_row, coboundary_witness, enumerate_basis,
                         parse_mode)
from .differential import (ReductionError, coboundary, homotopy, homotopy_identity,
                           reduce_to_simple, wheel, wheel_product)
from .graphs import AerialGraph, GraphSum, cycle_graph, parse_policy, symmetrize, symmetrize_sum
from .oracle import antisym_trace, chevalley_coboundary_eval, cochain_eval, wheel_trace_eval
from .polyvector import (PolyVector, is_ascending_tensor, random_ascending_tensor, schouten)

MAX_COHOMOLOGY_N = 6
SUITES = ("d-squared", "homotopy", "schouten", "correspondence", "amitsur-levitzki", "wheels")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    policy: object
    mode: str
    seed: int
    trials: int
    inp: str = None
    out: str = None


# ------------------------------------------------------------- I/O

def _read_json(path):
    try:
        if path in (None, "-"):
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON from {path or 'stdin'}: {exc}") from exc


def read_sum(path):
    obj = _read_json(path)
    try:
        if isinstance(obj, dict) and "deb" in obj:
            return GraphSum.single(AerialGraph.from_json(obj))
        if isinstance(obj, dict) and "terms" in obj:
            return GraphSum.from_json(obj)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed sum: {exc}") from exc
    raise UsageError("expected a Sum JSON object with a 'terms' list or a Graph JSON object")


def _emit(obj, path):
    text = json.dumps(obj, indent=None, sort_keys=False)
    if path in (None, "-"):
        print(text)
    else:
        with open(path, "w") as fh:
            fh.write(text + "\n")


def _counterexample(obj):
    print(json.dumps(obj, sort_keys=True))


def _rand_args(d, count, rng, orders=None):
    """Random ascending tensors of orders 1..min(d, 3) unless given."""
    top = min(d, 3)
    out = []
    for k in range(count):
        p = orders[k] if orders else rng.randint(1, top)
        out.append(random_ascending_tensor(d, p, rng=rng))
    return out


# -------------------------------------------------------- commands

def cmd_enumerate(args, cfg):
    if args.n is None or args.n < 1:
        raise UsageError("--n must be a positive integer")
    sl = enumerate_basis(args.n, cfg.policy, cfg.mode)
    vecs = [sl.vector(c).to_json() for c in range(len(sl))]
    if cfg.out:
        _emit(vecs, cfg.out)
    else:
        _emit(vecs, None)
    print(f"count {len(sl)}", file=sys.stdout if cfg.out else sys.stderr)
    return 0


def cmd_differential(args, cfg):
    delta = read_sum(cfg.inp)
    _emit(coboundary(delta, cfg.policy).to_json(), cfg.out)
    return 0


def cmd_symmetrize(args, cfg):
    delta = read_sum(cfg.inp)
    _emit(symmetrize_sum(delta).to_json(), cfg.out)
    return 0


def cmd_wheel(args, cfg):
    if args.length is None or args.length < 1:
        raise UsageError("--length must be a positive integer")
    _emit(wheel(args.length).to_json(), cfg.out)
    return 0


def cmd_wheel_product(args, cfg):
    try:
        ks = [int(k) for k in (args.ks or "").split(",") if k.strip()]
        _emit(wheel_product(ks).to_json(), cfg.out)
    except ValueError as exc:
        raise UsageError(f"--ks: {exc}") from exc
    return 0


def cmd_reduce(args, cfg):
    delta = read_sum(cfg.inp)
    try:
        red, beta, steps, orders = reduce_to_simple(delta, cfg.policy)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    except ReductionError as exc:
        _counterexample({"error": str(exc), "input": delta.to_json()})
        return 1
    _emit({"reduced": red.to_json(), "witness": beta.to_json() if beta is not None else None,
           "steps": steps,
           "orders": [None if w is None else [list(t) for t in w.types] for w in orders]},
          cfg.out)
    return 0


def cmd_cohomology(args, cfg):
    nmax = args.n if args.n is not None else 4
    if not 1 <= nmax <= MAX_COHOMOLOGY_N:
        raise UsageError(f"--n must lie in 1..{MAX_COHOMOLOGY_N}")
    if cfg.policy.kind == "unrestricted":
        raise UsageError("cohomology needs the ascending or descending policy")
    rows = []
    for mode in ("include", "exclude"):
        for n in range(1, nmax + 1):
            rows.append(betti_row(n, cfg.policy, mode))
    if args.json:
        _emit([r.to_json() for r in rows], cfg.out)
        return 0
    for mode in ("include", "exclude"):
        print(f"# policy={cfg.policy} isolated={mode}")
        print("n dim_basis rank_in rank_out betti")
        for r in rows:
            if r.mode == mode:
                print(f"{r.n} {r.dim_basis} {r.rank_in} {r.rank_out} {r.betti}")
    return 0


def cmd_oracle(args, cfg):
    """Check the graph coboundary against the tensor coboundary on random arguments."""
    delta = read_sum(cfg.inp)
    d = args.dim or 2
    rng = random.Random(cfg.seed)
    dd = coboundary(delta, cfg.policy)
    for t in range(cfg.trials):
        xs = _rand_args(d, delta.n + 1, rng)
        lhs = chevalley_coboundary_eval(delta, xs)
        rhs = cochain_eval(dd, xs) if dd else PolyVector(d, 0)
        if lhs != rhs:
            _counterexample({"seed": cfg.seed, "trial": t, "dim": d,
                             "args": [x.to_json() for x in xs]})
            return 1
    print(f"ok {cfg.trials} trials")
    return 0


# --------------------------------------------------------- suites

def suite_d_squared(args, cfg):
    n = args.n or 3
    modes = [cfg.mode] if args.isolated else ["include", "exclude"]
    for mode in modes:
        for k in range(1, n + 1):
            sl = enumerate_basis(k, cfg.policy, mode)
            for c in range(len(sl)):
                dd = coboundary(coboundary(sl.vector(c), cfg.policy), cfg.policy)
                if dd:
                    return {"rep": sl.reps[c].to_json(), "mode": mode, "dd": dd.to_json()}
    return None


def suite_homotopy(args, cfg):
    n = args.n or 3
    for k in range(2, n + 2):
        r = homotopy(cycle_graph(k))
        if r is None or r[0] != cycle_graph(k - 1):
            return {"cycle": k, "result": None if r is None else r[0].to_json()}
    if homotopy(AerialGraph([()] * max(n, 1))) is not None:
        return {"isolated": n}
    if cfg.policy.kind == "unrestricted":
        return None
    for k in range(1, n + 1):
        sl = enumerate_basis(k, cfg.policy, "include")
        for c in range(len(sl)):
            lhs, rhs = homotopy_identity(sl.vector(c), cfg.policy)
            if lhs != rhs:
                return {"rep": sl.reps[c].to_json(), "lhs": lhs.to_json(), "rhs": rhs.to_json()}
    return None


def _graded_sign(a, b):
    return -1 if (a.deg * b.deg) % 2 else 1


def suite_schouten(args, cfg):
    rng = random.Random(cfg.seed)
    dmax = args.dim or 3
    for t in range(cfg.trials):
        d = rng.randint(1, dmax)
        a, b, c = (random_ascending_tensor(d, rng.randint(1, min(d, 3)), rng=rng) for _ in range(3))
        if schouten(a, b) != schouten(b, a).scale(-_graded_sign(a, b)):
            return {"seed": cfg.seed, "trial": t, "law": "antisymmetry"}
        # graded Jacobi in cyclic form
        s_ac = -1 if (a.deg * c.deg) % 2 else 1
        s_ba = -1 if (b.deg * a.deg) % 2 else 1
        s_cb = -1 if (c.deg * b.deg) % 2 else 1
        jac = (schouten(a, schouten(b, c)).scale(s_ac) + schouten(b, schouten(c, a)).scale(s_ba)
               + schouten(c, schouten(a, b)).scale(s_cb))
        if jac:
            return {"seed": cfg.seed, "trial": t, "law": "jacobi"}
        br = schouten(a, b)
        if br and not is_ascending_tensor(br):
            return {"seed": cfg.seed, "trial": t, "law": "ascending closure"}
    return None


def correspondence_inputs():
    pt = AerialGraph([()])
    return {
        "S(point)": symmetrize(pt),
        "R1": wheel(1),
        "S(loop+point)": symmetrize(AerialGraph([(1,), ()])),
        "R3": wheel(3),
    }


def suite_correspondence(args, cfg):
    # the unrestricted differential: the graded filter drops terms whose
    # cochains are not zero
    from .graphs import unrestricted
    pol = unrestricted(args.max_out or 3)
    dims = [args.dim] if args.dim else [2, 3]
    for name, delta in correspondence_inputs().items():
        dd = coboundary(delta, pol)
        for d in dims:
            rng = random.Random(f"{cfg.seed}:{name}:{d}")
            for t in range(cfg.trials):
                xs = _rand_args(d, delta.n + 1, rng)
                lhs = chevalley_coboundary_eval(delta, xs)
                rhs = cochain_eval(dd, xs) if dd else PolyVector(d, 0)
                if lhs != rhs:
                    return {"seed": cfg.seed, "input": name, "dim": d, "trial": t}
    return None


def _rand_matrix(size, rng, bound=5):
    return [[rng.randint(-bound, bound) for _ in range(size)] for _ in range(size)]


def suite_amitsur_levitzki(args, cfg):
    size = args.dim or 2
    k = args.length or 2 * size + 1
    rng = random.Random(cfg.seed)
    values = []
    for t in range(cfg.trials):
        mats = [_rand_matrix(size, rng) for _ in range(k)]
        v = antisym_trace(mats)
        values.append(v)
        if k > 2 * size and v != 0:
            return {"seed": cfg.seed, "trial": t, "matrices": mats, "value": str(v)}
    if k <= 2 * size and k % 2 == 1 and not any(values):
        return {"seed": cfg.seed, "length": k, "dim": size, "error": "no nonzero trace found"}
    return None


def suite_wheels(args, cfg):
    k = args.length or 3
    if k % 2 == 0:
        if wheel(k):
            return {"length": k, "error": "even wheel does not vanish"}
        return None
    d = args.dim or 2
    rng = random.Random(cfg.seed)
    w = wheel(k)
    for t in range(cfg.trials):
        xs = _rand_args(d, k, rng, orders=[1] * k) if t % 2 else _rand_args(d, k, rng)
        a = cochain_eval(w, xs)
        b = wheel_trace_eval((k - 1) // 2, xs)
        if a != b or (k > 2 * d and a):
            return {"seed": cfg.seed, "trial": t, "length": k, "dim": d}
    return None


SUITE_FUNCS = {
    "d-squared": suite_d_squared,
    "homotopy": suite_homotopy,
    "schouten": suite_schouten,
    "correspondence": suite_correspondence,
    "amitsur-levitzki": suite_amitsur_levitzki,
    "wheels": suite_wheels,
}


def cmd_verify(args, cfg):
    if args.suite not in SUITE_FUNCS:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    bad = SUITE_FUNCS[args.suite](args, cfg)
    if bad is not None:
        _counterexample(bad)
        return 1
    print(f"{args.suite}: ok")
    return 0


COMMANDS = {
    "enumerate": cmd_enumerate,
    "differential": cmd_differential,
    "symmetrize": cmd_symmetrize,
    "wheel": cmd_wheel,
    "wheel-product": cmd_wheel_product,
    "reduce": cmd_reduce,
    "cohomology": cmd_cohomology,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="ascgraph", description="Aerial graph complex toolkit.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("suite", nargs="?", help="suite name for 'verify'")
    p.add_argument("--n", type=int)
    p.add_argument("--policy", default="ascending")
    p.add_argument("--isolated", default=None, help="include or exclude")
    p.add_argument("--max-out", type=int, default=3)
    p.add_argument("--in", dest="inp")
    p.add_argument("--out")
    p.add_argument("--dim", type=int)
    p.add_argument("--length", type=int)
    p.add_argument("--trials", type=int, default=25)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--ks")
    p.add_argument("--json", action="store_true", help="machine-readable cohomology table")
    return p


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        if args.trials < 1 or args.seed < 0:
            raise UsageError("--trials must be positive and --seed nonnegative")
        try:
            policy = parse_policy(args.policy, args.max_out)
            mode = parse_mode(args.isolated or "include")
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        if args.command != "verify" and args.suite is not None:
            raise UsageError(f"unexpected argument {args.suite!r}")
        cfg = RunConfig(policy, mode, args.seed, args.trials, args.inp, args.out)
        return COMMANDS[args.command](args, cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
