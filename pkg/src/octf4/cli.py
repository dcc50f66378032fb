"""Command line interface.

Exit codes: 0 success, 1 malformed input or usage error, 2 a numerical
verification or reduction failed its tolerance.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .config import Config, ENV_SEED
from .jordan import (HermMat3, NotOnVarietyError, cone_membership,
                     differential_kernel, jordan_product)
from . import normalize as nz
from . import octonion as oc
from . import rootdata as rd
from .spin import GeneratorWord, SpinGenerator, conjugation_oracle, apply_generator


def _load_matrix(path: str):
    with open(path) as fh:
        data = json.load(fh)
    if data.get("real"):
        return nz.RealHermMat3.from_json(data)
    return HermMat3.from_json(data)


def _trace_to_json(tr: nz.ReductionTrace) -> dict:
    def mat_json(m):
        return m.to_json()
    return {
        "input": mat_json(tr.input),
        "word": tr.word.to_json(),
        "steps": [{
            "branch": st.branch,
            "letters": [g.to_json() for g in st.letters],
            "matrix": mat_json(st.matrix),
        } for st in tr.steps],
        "final": mat_json(tr.final),
        "residual": tr.residual,
        "scale": [tr.scale.real, tr.scale.imag],
    }


def _cmd_reduce(args, cfg: Config) -> int:
    try:
        a = _load_matrix(args.infile)
    except (OSError, ValueError, KeyError) as e:
        print(f"error: cannot read input matrix: {e}", file=sys.stderr)
        return 1
    is_real = isinstance(a, nz.RealHermMat3)
    if args.real and not is_real:
        try:
            a = nz.RealHermMat3.from_complex(a)
        except ValueError as e:
            print(f"error: {e}", file=sys.stderr)
            return 1
        is_real = True
    try:
        tr = nz.reduce_real(a, cfg.tol) if is_real else nz.reduce_to_canonical(a, cfg.tol)
    except (NotOnVarietyError, nz.ReductionError) as e:
        print(f"reduction failed: {e}", file=sys.stderr)
        return 2
    defect = nz.verify_trace(tr, cfg.tol)
    out = _trace_to_json(tr)
    out["verify_defect"] = defect
    text = json.dumps(out, indent=2)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    print(f"reduced in {len(tr.word.letters)} letters, residual {tr.residual:.3e}, "
          f"re-verification defect {defect:.3e}", file=sys.stderr)
    return 0 if defect <= cfg.tol.accept * max(1.0, abs(tr.scale)) else 2


def _cmd_sample(args, cfg: Config) -> int:
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    pts = (nz.sample_real_orbit(cfg.seed, args.n) if args.real
           else nz.sample_orbit(cfg.seed, args.n))
    for i, a in enumerate(pts):
        (outdir / f"sample_{i:04d}.json").write_text(json.dumps(a.to_json(), indent=2) + "\n")
    print(f"wrote {args.n} {'real ' if args.real else ''}orbit samples "
          f"(seed {cfg.seed}) to {outdir}")
    return 0


def _cmd_classify(args, cfg: Config) -> int:
    try:
        a = _load_matrix(args.infile)
    except (OSError, ValueError, KeyError) as e:
        print(f"error: cannot read input matrix: {e}", file=sys.stderr)
        return 1
    if isinstance(a, nz.RealHermMat3):
        member, sq, tr_resid, nrm = nz.real_cone_membership(a, cfg.tol)
        report = {"real": True, "on_cone": member, "square_residual": sq,
                  "trace_residual": tr_resid, "norm": nrm}
        if member:
            report["half_cone"] = "canonical" if -a.diag[0] / 2.0 > 0 else "opposite"
    else:
        rep = cone_membership(a, cfg.tol)
        report = {"real": False, "on_cone": rep.member,
                  "square_residual": rep.square_residual,
                  "trace_residual": rep.trace_residual, "norm": rep.norm}
        if rep.member:
            report["branch"] = nz.classify(a, cfg.tol)
    print(json.dumps(report, indent=2))
    return 0


def _verify_identities(n: int, rng, tol) -> list:
    x = rng.standard_normal((n, 8)) + 1j * rng.standard_normal((n, 8))
    y = rng.standard_normal((n, 8)) + 1j * rng.standard_normal((n, 8))
    scale = (np.linalg.norm(x, axis=1) * np.linalg.norm(y, axis=1)).max()
    checks = []
    nx = oc.norm(x)[:, None]
    checks.append(("x (x~ y) = N(x) y",
                   np.abs(oc.multiply(x, oc.multiply(oc.conj(x), y)) - nx * y).max()))
    checks.append(("(y x~) x = N(x) y",
                   np.abs(oc.multiply(oc.multiply(y, oc.conj(x)), x) - nx * y).max()))
    z = rng.standard_normal((n, 8)) + 1j * rng.standard_normal((n, 8))
    lhs = oc.multiply(oc.multiply(x, y), oc.multiply(z, x))
    rhs = oc.multiply(x, oc.multiply(oc.multiply(y, z), x))
    checks.append(("Moufang (xy)(zx) = x((yz)x)", np.abs(lhs - rhs).max()))
    checks.append(("alternative x(xy) = (xx)y",
                   np.abs(oc.multiply(x, oc.multiply(x, y))
                          - oc.multiply(oc.multiply(x, x), y)).max()))
    checks.append(("N(xy) = N(x) N(y)",
                   np.abs(oc.norm(oc.multiply(x, y)) - oc.norm(x) * oc.norm(y)).max()))
    bound = tol.rel_tol * max(scale ** 4, 1.0)
    return [(name, resid, resid <= bound) for name, resid in checks]


def _cmd_verify(args, cfg: Config) -> int:
    rng = np.random.default_rng(np.random.PCG64(cfg.seed))
    ok = True
    if args.suite == "identities":
        for name, resid, passed in _verify_identities(args.n, rng, cfg.tol):
            ok &= passed
            print(f"{'PASS' if passed else 'FAIL'}  {name}: {resid:.3e}")
    elif args.suite == "automorphism":
        base = nz.canonical_complex()
        worst = 0.0
        for _ in range(args.n):
            g = nz._random_letter(rng)
            a = nz.random_word(rng, 3).apply(base)
            b = nz.random_word(rng, 3).apply(base)
            lhs = apply_generator(g, jordan_product(a, b))
            rhs = jordan_product(apply_generator(g, a), apply_generator(g, b))
            worst = max(worst, (lhs - rhs).norm() / max(a.norm() * b.norm(), 1.0))
        ok = worst <= 1e-9
        print(f"{'PASS' if ok else 'FAIL'}  automorphism defect over {args.n} letters: {worst:.3e}")
    elif args.suite == "orbit":
        worst = 0.0
        for a in nz.sample_orbit(cfg.seed, args.n):
            tr = nz.reduce_to_canonical(a, cfg.tol)
            worst = max(worst, max(tr.residual, nz.verify_trace(tr, cfg.tol)))
        ok = worst <= cfg.tol.accept * 10
        print(f"{'PASS' if ok else 'FAIL'}  worst orbit reduction defect over {args.n} samples: {worst:.3e}")
    else:
        print(f"error: unknown suite {args.suite!r}", file=sys.stderr)
        return 1
    return 0 if ok else 2


def _cmd_verify_trace(args, cfg: Config) -> int:
    try:
        with open(args.infile) as fh:
            data = json.load(fh)
        word = GeneratorWord.from_json(data["word"])
        inp = data["input"]
        if inp.get("real"):
            start = nz.RealHermMat3.from_json(inp)
            final = nz.RealHermMat3.from_json(data["final"])
        else:
            start = HermMat3.from_json(inp)
            final = HermMat3.from_json(data["final"])
        scale = complex(data["scale"][0], data["scale"][1])
    except (OSError, ValueError, KeyError) as e:
        print(f"error: cannot read trace file: {e}", file=sys.stderr)
        return 1
    tr = nz.ReductionTrace(start, (), word, final, float(data.get("residual", 0.0)), scale)
    defect = nz.verify_trace(tr, cfg.tol)
    passed = defect <= cfg.tol.accept * max(1.0, abs(scale))
    print(f"{'PASS' if passed else 'FAIL'}  realize(word)(input) vs scale * final: {defect:.3e}")
    return 0 if passed else 2


def _cmd_dims(args, cfg: Config) -> int:
    dims = {f"w{i + 1}": rd.weyl_dim([1 if j == i else 0 for j in range(4)])
            for i in range(4)}
    print(json.dumps(dims))
    pd = rd.parabolic_dims({4})
    print(f"sigma = {{alpha_4}}: parabolic {pd['parabolic']}, "
          f"nilradical {pd['nilradical']}, levi {pd['levi']}")
    small = rd.unique_small_irrep_check()
    print(f"irreps of dim <= 26 (coefficient sum <= 2): {small}")
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="octf4",
        description="Cone reductions in the exceptional Jordan algebra and F4 data")
    parser.add_argument("--config", help="JSON config file (tol/seed/samples)")
    parser.add_argument("--seed", type=int, default=None,
                        help=f"RNG seed (overrides config and ${ENV_SEED})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="reduce a cone point to canonical form")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--real", action="store_true",
                   help="treat the input as a real-form element")
    p.add_argument("--tol", type=float, default=None, help="acceptance tolerance")

    p = sub.add_parser("sample", help="write seeded orbit samples as JSON files")
    p.add_argument("-n", type=int, default=10)
    p.add_argument("--out", required=True)
    p.add_argument("--real", action="store_true")

    p = sub.add_parser("classify", help="report cone membership and branch")
    p.add_argument("--in", dest="infile", required=True)

    p = sub.add_parser("verify", help="run a randomized verification suite")
    p.add_argument("--suite", choices=["identities", "automorphism", "orbit"],
                   required=True)
    p.add_argument("-n", type=int, default=100)

    p = sub.add_parser("verify-trace", help="re-verify a stored reduction trace")
    p.add_argument("--in", dest="infile", required=True)

    sub.add_parser("dims", help="print irrep and parabolic dimensions")

    args = parser.parse_args(argv)
    try:
        cfg = Config.from_file(args.config) if args.config else Config()
    except (OSError, ValueError, KeyError) as e:
        print(f"error: bad config: {e}", file=sys.stderr)
        return 1
    cfg = cfg.with_seed(args.seed)
    if getattr(args, "tol", None):
        from dataclasses import replace
        cfg = replace(cfg, tol=replace(cfg.tol, accept=args.tol))

    handler = {
        "reduce": _cmd_reduce,
        "sample": _cmd_sample,
        "classify": _cmd_classify,
        "verify": _cmd_verify,
        "verify-trace": _cmd_verify_trace,
        "dims": _cmd_dims,
    }[args.command]
    return handler(args, cfg)


if __name__ == "__main__":
    sys.exit(main())
