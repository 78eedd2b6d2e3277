# Copyright (C) 2026 by the matmoment contributors

# Licensed under the BSD 3-Clause License.
# See the LICENSE file in the project root for complete license terms and disclaimers.

"""Command line entry point.

Commands:

- ``solve``: build the pair, the second-kind polynomials and Theta, write them
  to ``solution.json`` with the maximum-entropy density in ``density.csv``
- ``verify``: run the identity suite and write ``verify.json``
- ``sample-solutions``: evaluate T_Theta[S] for several Schur parameters
- ``entropy``: the entropy inequality for several Schur parameters
- ``random-instance``: write a seeded positive definite moment file

Exit codes come from the exceptions in :mod:`matmoment.base`.
"""

import argparse
import csv
import json
import logging
import sys
from collections.abc import Sequence
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any

import numpy as np

from ._version import __version__
from .base import InputError, MomentError, VerificationError
from .blockmat import (
    MatrixMoments,
    MomentKind,
    gram_from_matrix,
    random_hankel_moments,
    random_toeplitz_moments,
)
from .constants import (
    DEFAULT_DISC_OMEGA,
    DEFAULT_HALF_PLANE_OMEGA,
    DENSITY_GRID,
    HAMBURGER_MOMENT_TOL,
    TRIG_MOMENT_TOL,
)
from .debranges import DeBrangesData, DeBrangesPair, default_pair, second_kind
from .identities import run_identity_suite
from .math_utils import CARRAY, adjoint, hermitianize, relative_residual
from .matpoly import Geometry, block_to_json
from .solutions import (
    SchurParameter,
    SolutionFunction,
    ThetaMatrix,
    assemble_theta,
    caratheodory_margin,
    density_sup_distance,
    entropy_check,
    recover_hamburger_moments,
    recover_trig_moments,
    sample_schur,
)

__all__ = ("RunConfig", "grid_points", "main")

logger = logging.getLogger(__name__)

COMMANDS = ("solve", "verify", "sample-solutions", "random-instance", "entropy")
DEFAULT_SCHUR = (
    {"type": "zero"},
    {"type": "constant", "value": 0.5},
    {"type": "constant", "value": -0.5},
)
EXTREMAL = "extremal"


@dataclass(frozen=True)
class RunConfig:
    """Settings of one command line run."""

    command: str
    input: Path | None = None
    output: Path = Path(".")
    seed: int = 0
    alpha: complex | None = None
    omega: complex | None = None
    tol_identity: float | None = None
    tol_moment: float | None = None
    grid: int = DENSITY_GRID
    perturb: float = 0.0
    schur: tuple[dict[str, Any], ...] = ()
    kind: MomentKind = MomentKind.TRIGONOMETRIC
    p: int = 1
    n: int = 1
    verbose: int = 0

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        """Collect parsed arguments."""
        schur = []
        for text in args.schur or []:
            try:
                schur.append(json.loads(text))
            except json.JSONDecodeError as exc:
                raise InputError(f"--schur is not valid JSON ({exc.msg}): {text}") from exc
        return cls(
            command=args.command,
            input=None if args.input is None else Path(args.input),
            output=Path(args.output),
            seed=args.seed,
            alpha=args.alpha,
            omega=args.omega,
            tol_identity=args.tol_identity,
            tol_moment=args.tol_moment,
            grid=args.grid,
            perturb=args.perturb,
            schur=tuple(schur),
            kind=MomentKind(args.kind),
            p=args.p,
            n=args.n,
            verbose=args.verbose,
        )

    def moment_tolerance(self, kind: MomentKind) -> float:
        """The moment-recovery tolerance for the kind."""
        if self.tol_moment is not None:
            return self.tol_moment
        return TRIG_MOMENT_TOL if kind is MomentKind.TRIGONOMETRIC else HAMBURGER_MOMENT_TOL

    def evaluation_point(self, geometry: Geometry) -> complex:
        """--omega or the geometry default."""
        if self.omega is not None:
            return self.omega
        return DEFAULT_DISC_OMEGA if geometry is Geometry.DISC else DEFAULT_HALF_PLANE_OMEGA


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise InputError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="matmoment",
        description="Truncated matrix moment problems through de Branges spaces.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", help="Moment JSON file.")
    parser.add_argument("--output", default=".", help="Directory for artifacts (default: .).")
    parser.add_argument("--seed", type=int, default=0, help="Random seed (default: 0).")
    parser.add_argument("--alpha", type=complex, help="Construction point, e.g. 0.5 or 1j.")
    parser.add_argument("--omega", type=complex, help="Evaluation point for entropy reports.")
    parser.add_argument(
        "--tol-identity", type=float, dest="tol_identity",
        help="Override every identity tolerance.",
    )
    parser.add_argument(
        "--tol-moment", type=float, dest="tol_moment",
        help=f"Moment tolerance (default: {TRIG_MOMENT_TOL:g} trig, {HAMBURGER_MOMENT_TOL:g} Hamburger).",
    )
    parser.add_argument(
        "--grid", type=int, default=DENSITY_GRID,
        help=f"Boundary points in density files (default: {DENSITY_GRID}).",
    )
    parser.add_argument(
        "--perturb", type=float, nargs="?", const=1e-3, default=0.0,
        help="Perturb G by this relative size before verifying (default when given: 1e-3).",
    )
    parser.add_argument(
        "--schur", action="append",
        help='Schur parameter as inline JSON, e.g. \'{"type":"constant","value":0.5}\'. Repeatable.',
    )
    parser.add_argument(
        "--kind", choices=[k.value for k in MomentKind], default=MomentKind.TRIGONOMETRIC.value,
        help="Kind for random-instance.",
    )
    parser.add_argument("--p", type=int, default=1, help="Block size for random-instance.")
    parser.add_argument("--n", type=int, default=1, help="Order for random-instance.")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    return parser


def grid_points(geometry: Geometry, count: int) -> tuple[np.ndarray, CARRAY]:
    """Abscissae and boundary points of the density files.

    Disc: t_j = 2 pi j / M on e^{it}. Half-plane: mu_j = tan((j + 1/2) pi / M - pi / 2).
    """
    j = np.arange(count)
    if geometry is Geometry.DISC:
        t = 2 * np.pi * j / count
        return t, np.exp(1j * t)
    mu = np.tan((j + 0.5) * np.pi / count - np.pi / 2)
    return mu, mu.astype(complex)


def _write_json(path: Path, payload: dict[str, Any]) -> None:
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    logger.info("Wrote %s", path)


def _write_density(path: Path, geometry: Geometry, x: np.ndarray, values: CARRAY) -> None:
    p = values.shape[-1]
    header = ["t" if geometry is Geometry.DISC else "mu"]
    for r in range(p):
        for c in range(p):
            header += [f"re_{r}{c}", f"im_{r}{c}"]
    with path.open("w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for xi, block in zip(x, values):
            row = [format(float(xi), ".17g")]
            for v in block.ravel():
                row += [format(float(v.real), ".17g"), format(float(v.imag), ".17g")]
            writer.writerow(row)
    logger.info("Wrote %s", path)


def _complex_json(value: complex | None) -> list[float] | None:
    if value is None:
        return None
    return [float(value.real), float(value.imag)]


def _load(cfg: RunConfig) -> tuple[MatrixMoments, DeBrangesData]:
    if cfg.input is None:
        raise InputError(f"{cfg.command} needs --input")
    moments = MatrixMoments.load(cfg.input)
    return moments, DeBrangesData.from_moments(moments, alpha=cfg.alpha)


def _recover(solution: SolutionFunction, count: int | None = None) -> CARRAY:
    if solution.geometry is Geometry.DISC:
        return recover_trig_moments(solution, count)
    return recover_hamburger_moments(solution, count)


def _moment_residuals(moments: MatrixMoments, recovered: CARRAY) -> list[float]:
    return [relative_residual(recovered[k], moments.blocks[k]) for k in range(len(moments.blocks))]


def _prepare(cfg: RunConfig) -> tuple[MatrixMoments, DeBrangesData, DeBrangesPair, ThetaMatrix]:
    moments, data = _load(cfg)
    pair = default_pair(data)
    return moments, data, pair, assemble_theta(data, pair)


def cmd_solve(cfg: RunConfig) -> int:
    """Maximum-entropy solution and its artifacts."""
    moments, data, pair, theta = _prepare(cfg)
    eminus_o, eplus_o = second_kind(data, pair)
    solution = SolutionFunction(theta, SchurParameter.zero(data.p, data.geometry))
    residuals = _moment_residuals(moments, _recover(solution))
    tol = cfg.moment_tolerance(moments.kind)
    print(" k  residual")
    for k, r in enumerate(residuals):
        print(f"{k:2d}  {r:.3e}")
    if max(residuals) > tol:
        logger.warning("Moment recovery residual %.3e exceeds %.1e", max(residuals), tol)
    payload = {
        "kind": moments.kind.value,
        "p": data.p,
        "n": data.n,
        "construction": pair.construction.value,
        "alpha": _complex_json(pair.alpha),
        "eminus": pair.eminus.to_json(),
        "eplus": pair.eplus.to_json(),
        "eminus_o": eminus_o.to_json(),
        "eplus_o": eplus_o.to_json(),
        "theta": theta.to_json(),
        "moment_residuals": residuals,
        "moment_tolerance": tol,
    }
    if data.geometry is Geometry.HALF_PLANE:
        payload["chi_infinity"] = block_to_json(theta.chi_infinity())
    cfg.output.mkdir(parents=True, exist_ok=True)
    _write_json(cfg.output / "solution.json", payload)
    x, pts = grid_points(data.geometry, cfg.grid)
    _write_density(cfg.output / "density.csv", data.geometry, x, pair.density(pts))
    return 0


def perturbed_data(data: DeBrangesData, size: float, seed: int) -> DeBrangesData:
    """Data for G + size ||G|| H with H a random Hermitian matrix of unit norm."""
    rng = np.random.default_rng(seed)
    X = rng.standard_normal((data.m, data.m)) + 1j * rng.standard_normal((data.m, data.m))
    H = hermitianize(X)
    H /= np.linalg.norm(H, 2)
    G = data.G + size * np.linalg.norm(data.G, 2) * H
    gram = gram_from_matrix(G, data.gram.dims)
    return DeBrangesData.from_gram(gram, data.geometry, data.alpha)


def cmd_verify(cfg: RunConfig) -> int:
    """Identity suite, optionally on a perturbed G."""
    moments, data = _load(cfg)
    if cfg.perturb > 0:
        data = perturbed_data(data, cfg.perturb, cfg.seed)
    reports = run_identity_suite(
        data, seed=cfg.seed, tolerance=cfg.tol_identity, structure_only=cfg.perturb > 0
    )
    failed = [r.name for r in reports if not r.passed]
    payload = {
        "kind": moments.kind.value,
        "p": data.p,
        "n": data.n,
        "seed": cfg.seed,
        "perturb": cfg.perturb,
        "passed": not failed,
        "failed": failed,
        "reports": [r.to_dict() for r in reports],
    }
    cfg.output.mkdir(parents=True, exist_ok=True)
    _write_json(cfg.output / "verify.json", payload)
    if failed:
        raise VerificationError(f"{len(failed)} of {len(reports)} identities failed", failed)
    return 0


def _schur_list(
    cfg: RunConfig, data: DeBrangesData, pair: DeBrangesPair, omega: complex
) -> list[tuple[dict[str, Any], SchurParameter]]:
    specs = cfg.schur or DEFAULT_SCHUR
    out = []
    for i, spec in enumerate(specs):
        if isinstance(spec, dict) and spec.get("type") == EXTREMAL:
            S = SchurParameter.from_constant(-adjoint(pair.chi(omega)), data.geometry)
        else:
            S = sample_schur(spec, data.p, data.geometry, cfg.seed + i)
        out.append((spec, S))
    return out


def cmd_sample_solutions(cfg: RunConfig) -> int:
    """Densities, recovered moments and margins for several Schur parameters."""
    moments, data, pair, theta = _prepare(cfg)
    omega = cfg.evaluation_point(data.geometry)
    x, pts = grid_points(data.geometry, cfg.grid)
    cfg.output.mkdir(parents=True, exist_ok=True)
    tol = cfg.moment_tolerance(moments.kind)
    entries = []
    solutions = []
    extra = []
    for i, (spec, S) in enumerate(_schur_list(cfg, data, pair, omega)):
        solution = SolutionFunction(theta, S)
        solutions.append(solution)
        _write_density(cfg.output / f"density_s{i}.csv", data.geometry, x, solution.density(pts))
        if data.geometry is Geometry.DISC:
            recovered = _recover(solution, data.n + 2)
            extra.append(recovered[-1])
        else:
            recovered = _recover(solution)
        residuals = _moment_residuals(moments, recovered)
        entry = {
            "index": i,
            "schur": spec,
            "recovered": [block_to_json(b) for b in recovered],
            "moment_residuals": residuals,
            "moments_match": max(residuals) <= tol,
            "caratheodory_min_eigenvalue": caratheodory_margin(solution),
        }
        try:
            entry["entropy"] = entropy_check(data, pair, theta, S, omega).to_dict()
        except MomentError as exc:
            logger.warning("Entropy skipped for S%d: %s", i, exc)
            entry["entropy"] = None
        entries.append(entry)
    witness = 0.0
    if data.geometry is Geometry.DISC:
        for a in range(len(extra)):
            for b in range(a + 1, len(extra)):
                witness = max(witness, float(np.linalg.norm(extra[a] - extra[b], 2)))
    else:
        for a in range(len(solutions)):
            for b in range(a + 1, len(solutions)):
                witness = max(witness, density_sup_distance(solutions[a], solutions[b], pts))
    payload = {
        "kind": moments.kind.value,
        "p": data.p,
        "n": data.n,
        "seed": cfg.seed,
        "omega": _complex_json(omega),
        "moment_tolerance": tol,
        "solutions": entries,
        "non_uniqueness": witness,
    }
    _write_json(cfg.output / "summary.json", payload)
    return 0


def cmd_entropy(cfg: RunConfig) -> int:
    """Entropy reports at --omega; the Schur spec {"type": "extremal"} gives -chi(omega)*."""
    moments, data, pair, theta = _prepare(cfg)
    omega = cfg.evaluation_point(data.geometry)
    if not cfg.schur:
        cfg = replace(cfg, schur=({"type": "zero"}, {"type": EXTREMAL}))
    reports = []
    for spec, S in _schur_list(cfg, data, pair, omega):
        report = entropy_check(data, pair, theta, S, omega)
        reports.append({"schur": spec, **report.to_dict()})
        print(f"gap {report.gap:.6e}  equality={report.equality_case}  {json.dumps(spec, sort_keys=True)}")
    cfg.output.mkdir(parents=True, exist_ok=True)
    _write_json(
        cfg.output / "entropy.json",
        {"kind": moments.kind.value, "omega": _complex_json(omega), "reports": reports},
    )
    return 0


def cmd_random_instance(cfg: RunConfig) -> int:
    """Seeded positive definite moments, exactly Toeplitz or Hankel."""
    if cfg.kind is MomentKind.TRIGONOMETRIC:
        moments = random_toeplitz_moments(cfg.p, cfg.n, cfg.seed)
    else:
        moments = random_hankel_moments(cfg.p, cfg.n, cfg.seed)
    cfg.output.mkdir(parents=True, exist_ok=True)
    _write_json(cfg.output / "moments.json", moments.to_json())
    return 0


HANDLERS = {
    "solve": cmd_solve,
    "verify": cmd_verify,
    "sample-solutions": cmd_sample_solutions,
    "random-instance": cmd_random_instance,
    "entropy": cmd_entropy,
}


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line and return the exit code."""
    try:
        args = _build_parser().parse_args(argv)
        cfg = RunConfig.from_args(args)
    except MomentError as exc:
        print(f"matmoment: error: {exc}", file=sys.stderr)
        return exc.exit_code
    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(cfg.verbose, 2)]
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    try:
        return HANDLERS[cfg.command](cfg)
    except MomentError as exc:
        print(f"matmoment: error: {exc}", file=sys.stderr)
        return exc.exit_code
