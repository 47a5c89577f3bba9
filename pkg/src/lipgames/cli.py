"""Command-line front end.

Commands: ``lambda``, ``sweep``, ``coupling``, ``meet-time``,
``equilibrium``, ``delta-star`` and ``verify``.  Every float is rendered
with 15 significant digits and all randomness flows through explicit
``--seed`` flags, so repeated runs with the same arguments produce
byte-identical output.  Errors exit nonzero with a one-line
``error: <Type>: <message>`` on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import coupling as cp
from . import games as gm
from . import lipschitz as lz
from . import oracle as orc
from . import random_walk as rw
from .errors import BudgetExceededError, IntegrityError

VERIFY_DELTAS = (0.1, 0.25, 0.5, 0.75, 0.9)
VERIFY_TOL = 1e-9


def _fmt(x: float) -> str:
    return format(float(x), ".15g")


def _jsonable(x):
    """Round floats to the 15-significant-digit rendering for JSON output."""
    if isinstance(x, float):
        return float(_fmt(x))
    if isinstance(x, dict):
        return {key: _jsonable(val) for key, val in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _emit(payload: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(_jsonable(payload), sort_keys=True))
        return
    for key, value in payload.items():
        if isinstance(value, float):
            value = _fmt(value)
        elif isinstance(value, (list, tuple)):
            value = "(" + ", ".join(str(v) for v in value) + ")"
        print(f"{key} = {value}")


def cmd_lambda(ns) -> int:
    payload: dict = {"n": ns.n, "k": ns.k, "delta": ns.delta}
    if ns.method in ("formula", "both"):
        res = lz.lipschitz_constant(ns.n, ns.k, ns.delta)
        payload.update(
            {
                "lambda": res.value,
                "lower": res.lower,
                "upper": res.upper,
                "method": res.method,
                "asymptotic": res.asymptotic,
            }
        )
    if ns.method in ("oracle", "both"):
        value, worst = orc.lipschitz_oracle(ns.n, ns.k, ns.delta)
        if ns.method == "oracle":
            payload.update(
                {
                    "lambda": value,
                    "lower": value,
                    "upper": value,
                    "method": lz.METHOD_ORACLE,
                    "asymptotic": lz.asymptotic_estimate(ns.n, ns.k, ns.delta),
                }
            )
        else:
            payload["oracle"] = value
            payload["difference"] = abs(payload["lambda"] - value)
        payload["worst_class"] = list(worst)
    _emit(payload, ns.json)
    return 0


def _sweep_rows(ns):
    if ns.n_stop < ns.n_start or ns.n_step < 1:
        raise ValueError("sweep range is empty; need n-start <= n-stop and n-step >= 1")
    if not ns.delta:
        raise ValueError("sweep needs at least one --delta")
    for d in ns.delta:
        if not 0.0 < d < 1.0:
            raise ValueError(f"delta must lie in (0, 1), got {d!r}")
    for n in range(ns.n_start, ns.n_stop + 1, ns.n_step):
        for d in ns.delta:
            res = lz.lipschitz_constant(n, ns.k, d)
            yield {
                "n": n,
                "k": ns.k,
                "delta": d,
                "lambda": res.value,
                "lower": res.lower,
                "upper": res.upper,
                "asymptotic": res.asymptotic,
                "ratio": res.value / res.asymptotic,
            }


def cmd_sweep(ns) -> int:
    rows = list(_sweep_rows(ns))
    if ns.format == "csv":
        lines = ["n,k,delta,lambda,lower,upper,asymptotic,ratio"]
        for row in rows:
            lines.append(
                ",".join(
                    [
                        str(row["n"]),
                        str(row["k"]),
                        _fmt(row["delta"]),
                        _fmt(row["lambda"]),
                        _fmt(row["lower"]),
                        _fmt(row["upper"]),
                        _fmt(row["asymptotic"]),
                        _fmt(row["ratio"]),
                    ]
                )
            )
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps([_jsonable(row) for row in rows], sort_keys=True) + "\n"
    if ns.output == "-":
        sys.stdout.write(text)
    else:
        with open(ns.output, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    return 0


def cmd_coupling(ns) -> int:
    est = cp.simulate_coupling(ns.n, ns.k, ns.delta, ns.samples, ns.seed, ns.baseline)
    exact = rw.passage_prob(ns.n, 2.0 * ns.delta / ns.k)
    diff = est.estimate - exact
    if est.std_error > 0.0:
        z = diff / est.std_error
    else:
        z = 0.0 if diff == 0.0 else float("inf")
    _emit(
        {
            "n": ns.n,
            "k": ns.k,
            "delta": ns.delta,
            "samples": est.samples,
            "seed": est.seed,
            "estimate": est.estimate,
            "std_error": est.std_error,
            "exact": exact,
            "z_score": z,
        },
        ns.json,
    )
    return 0


def cmd_meet_time(ns) -> int:
    res = cp.simulate_meet_time(ns.n, ns.k, ns.delta, ns.samples, ns.seed, ns.baseline)
    total_moves = int(res.transitions.sum())
    freq = res.transitions / total_moves if total_moves else np.zeros(3)
    rate = ns.delta / ns.k
    payload = {
        "n": ns.n,
        "k": ns.k,
        "delta": ns.delta,
        "samples": res.samples,
        "seed": res.seed,
        "freq_down": float(freq[0]),
        "freq_stay": float(freq[1]),
        "freq_up": float(freq[2]),
        "rate_down": rate,
        "rate_stay": 1.0 - 2.0 * rate,
        "rate_up": rate,
    }
    if ns.json:
        payload["counts"] = [int(c) for c in res.counts]
        print(json.dumps(_jsonable(payload), sort_keys=True))
        return 0
    _emit(payload, False)
    print("step,count")
    for step in range(1, ns.n + 1):
        print(f"{step},{int(res.counts[step])}")
    print(f"never,{int(res.counts[ns.n + 1])}")
    return 0


def cmd_equilibrium(ns) -> int:
    if (ns.game is None) == (ns.party is None):
        raise ValueError("provide exactly one of --game FILE or --party N")
    if ns.game is not None:
        game = gm.load_game(ns.game)
    else:
        prefs = ["even" if i % 2 == 0 else "odd" for i in range(ns.party)]
        game = gm.party_game(ns.party, prefs)
    if ns.epsilon == "auto":
        if ns.delta <= 0.0:
            raise ValueError("auto epsilon needs delta > 0")
        eps = 2.0 * game.k * lz.lipschitz_constant(game.n, game.k, ns.delta).value
    else:
        eps = float(ns.epsilon)
    found = gm.find_eps_nash(game, ns.delta, eps, ns.profile_budget)
    payload: dict = {"n": game.n, "k": game.k, "delta": ns.delta, "epsilon": eps}
    if found is None:
        payload["found"] = False
        _emit(payload, ns.json)
        return 0
    payload.update(
        {
            "found": True,
            "profile": list(found.profile),
            "max_regret": found.report.max_regret,
            "unperturbed_guarantee": ns.delta + found.report.max_regret,
            "unperturbed_regret": gm.regret_in_unperturbed(game, found.profile, ns.delta),
        }
    )
    _emit(payload, ns.json)
    return 0


def cmd_delta_star(ns) -> int:
    point = lz.delta_fixed_point(ns.n, ns.k, ns.tol)
    _emit(
        {
            "n": ns.n,
            "k": ns.k,
            "delta_star": point.delta,
            "lambda_star": point.value,
            "epsilon": 2.0 * point.delta,
            "residual": abs(point.value - point.delta),
        },
        ns.json,
    )
    return 0


def cmd_verify(ns) -> int:
    cases = 0
    worst = 0.0
    worst_case = None
    for k in (3, 4):
        for n in range(2, 9):
            for delta in VERIFY_DELTAS:
                diff = abs(
                    lz.lipschitz_multi_action(n, k, delta).value
                    - orc.lipschitz_oracle(n, k, delta).value
                )
                cases += 1
                if diff > worst:
                    worst, worst_case = diff, (n, k, delta)
    for n in range(2, 13):
        for delta in VERIFY_DELTAS:
            diff = abs(
                lz.lipschitz_two_action(n, delta).value
                - orc.lipschitz_oracle(n, 2, delta).value
            )
            cases += 1
            if diff > worst:
                worst, worst_case = diff, (n, 2, delta)
    print(f"cases = {cases}")
    print(f"max_deviation = {_fmt(worst)}")
    if worst_case is not None:
        print(f"worst_case = (n={worst_case[0]}, k={worst_case[1]}, delta={_fmt(worst_case[2])})")
    print(f"tolerance = {_fmt(VERIFY_TOL)}")
    if worst > VERIFY_TOL:
        print("verify: FAIL")
        return 1
    print("verify: PASS")
    return 0


def _add_json_flag(parser) -> None:
    parser.add_argument("--json", action="store_true", help="emit a single JSON object")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lipgames",
        description="Worst-case Lipschitz constants of delta-perturbed anonymous games",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lambda", help="evaluate the constant at one (n, k, delta)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--method", choices=("formula", "oracle", "both"), default="formula")
    _add_json_flag(p)
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("sweep", help="tabulate the constant over a parameter grid")
    p.add_argument("--n-start", type=int, required=True)
    p.add_argument("--n-stop", type=int, required=True)
    p.add_argument("--n-step", type=int, default=1)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--delta", type=float, action="append", required=True,
                   help="repeatable; one column group per value")
    p.add_argument("--output", default="-", help="file path, or - for stdout")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("coupling", help="Monte Carlo mirror coupling vs the exact walk value")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--baseline", type=int, default=None,
                   help="baseline action of the unperturbed players")
    _add_json_flag(p)
    p.set_defaults(func=cmd_coupling)

    p = sub.add_parser("meet-time", help="histogram of the chains' first meeting step")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--baseline", type=int, default=None)
    _add_json_flag(p)
    p.set_defaults(func=cmd_meet_time)

    p = sub.add_parser("equilibrium", help="exhaustive search for a pure eps-equilibrium")
    p.add_argument("--game", help="JSON game file (fields n, k, payoffs)")
    p.add_argument("--party", type=int, help="use the n-player party fixture instead of a file")
    p.add_argument("--delta", type=float, required=True,
                   help="perturbation; 0 evaluates the unperturbed game")
    p.add_argument("--epsilon", default="auto",
                   help='regret bound, or "auto" for 2*k*lambda(n,k,delta)')
    p.add_argument("--profile-budget", type=int, default=gm.DEFAULT_PROFILE_BUDGET)
    _add_json_flag(p)
    p.set_defaults(func=cmd_equilibrium)

    p = sub.add_parser("delta-star", help="solve lambda(n,k,delta) = delta by bisection")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-10)
    _add_json_flag(p)
    p.set_defaults(func=cmd_delta_star)

    p = sub.add_parser("verify", help="compare the closed forms against the brute-force oracle")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        return ns.func(ns)
    except (ValueError, IntegrityError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2 if isinstance(exc, BudgetExceededError) else 1


if __name__ == "__main__":
    sys.exit(main())
