"""Command-line front end: scenario files in, CSV (and optional figures) out.

Exit codes: 0 success, 2 unreadable or invalid scenario input, 3 domain
error (the error class name appears verbatim in the message).
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager

import numpy as np

from .core import PpsEnsemble, modular_value, weak_from_modular_derivative, weak_value
from .dynamics import (apply_modular_operator, joint_space_oracle,
                       persistence_scan, spatial_profile)
from .errors import DomainError
from .fauxqubit import orthogonality_scan, read_faux_qubit
from .mzi import pointer_response_curve, realize
from .pointer import gaussian_pointer
from .report import (format_complex_pair, write_orthogonality_csv,
                     write_persistence_csv, write_profile_csv,
                     write_readout_csv, write_response_csv)
from .scenario import ScenarioError, ScenarioFile

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DOMAIN = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pointerlab",
        description="Pre/post-selected pointer-measurement analyses")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, out=True, plot=True, oracle=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--scenario", required=True, help="scenario JSON file")
        p.add_argument("--hbar", type=float, default=None,
                       help="override the scenario's hbar")
        if out:
            p.add_argument("--out", default=None,
                           help="write CSV here instead of stdout")
        if plot:
            p.add_argument("--plot", default=None,
                           help="also render a figure to this file")
        if oracle:
            p.add_argument("--oracle", action="store_true",
                           help="cross-check against the joint-space oracle "
                                "and report the max amplitude deviation")
        return p

    add("weak-value", "print the weak value as 're, im'", out=False, plot=False)
    mv = add("modular-value", "print the modular value as 're, im'",
             out=False, plot=False)
    mv.add_argument("--derivative", action="store_true",
                    help="print the finite-difference weak-value check instead")
    mv.add_argument("--step", type=float, default=1e-4,
                    help="central-difference step for --derivative")
    add("profile", "final pointer state and intensity profile", oracle=True)
    add("persistence", "centroid / norm / interference per coupling value")
    add("orthogonality", "faux-basis |overlap| per coupling value")
    add("faux-read", "peak-ratio readout of the weak value", plot=False)
    add("mzi", "twin Mach-Zehnder scan (response curve, or camera profile "
               "for a single gamma)", oracle=True)
    return parser


@contextmanager
def _open_out(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _oracle_check(ens, proj, phi_state, gamma, result) -> None:
    reference = joint_space_oracle(ens, proj, phi_state, gamma, mode="spectral")
    deviation = float(np.max(np.abs(reference.amplitudes - result.state.amplitudes)))
    print(f"oracle max deviation: {deviation:.6e}", file=sys.stderr)


def cmd_weak_value(args) -> int:
    scn = ScenarioFile.load(args.scenario)
    ens, proj = scn.ensemble()
    print(format_complex_pair(weak_value(ens, proj).value))
    return EXIT_OK


def cmd_modular_value(args) -> int:
    scn = ScenarioFile.load(args.scenario)
    ens, proj = scn.ensemble()
    hbar = scn.hbar(args.hbar)
    if args.derivative:
        print(format_complex_pair(
            weak_from_modular_derivative(ens, proj, hbar=hbar, h=args.step)))
    else:
        print(format_complex_pair(
            modular_value(ens, proj, scn.gamma(), hbar=hbar).value))
    return EXIT_OK


def cmd_profile(args) -> int:
    scn = ScenarioFile.load(args.scenario)
    ens, proj = scn.ensemble()
    gamma = scn.gamma()
    phi_state = scn.pointer([gamma])
    result = apply_modular_operator(ens, proj, phi_state, gamma)
    intensity = spatial_profile(result)
    with _open_out(args.out) as fh:
        write_profile_csv(fh, result.state, intensity)
    if args.oracle:
        _oracle_check(ens, proj, phi_state, gamma, result)
    if args.plot:
        from . import figures
        figures.render_profile(result.state.grid, intensity, args.plot)
    return EXIT_OK


def cmd_persistence(args) -> int:
    scn = ScenarioFile.load(args.scenario)
    ens, proj = scn.ensemble()
    gammas = scn.gammas()
    phi_state = scn.pointer(gammas)
    rows = persistence_scan(ens, proj, phi_state, gammas)
    with _open_out(args.out) as fh:
        write_persistence_csv(fh, rows)
    if args.plot:
        from . import figures
        figures.render_curve([r.gamma for r in rows], [r.centroid for r in rows],
                             args.plot, "pointer centroid",
                             "Pointer response vs coupling strength")
    return EXIT_OK


def cmd_orthogonality(args) -> int:
    scn = ScenarioFile.load(args.scenario)
    gammas = scn.gammas()
    phi_state = scn.pointer(gammas)
    rows = orthogonality_scan(phi_state, gammas)
    with _open_out(args.out) as fh:
        write_orthogonality_csv(fh, rows)
    if args.plot:
        from . import figures
        figures.render_curve([r.gamma for r in rows], [r.abs_overlap for r in rows],
                             args.plot, "|<0~|1~>|",
                             "Faux-basis overlap vs coupling strength", logy=True)
    return EXIT_OK


def cmd_faux_read(args) -> int:
    scn = ScenarioFile.load(args.scenario)
    ens, proj = scn.ensemble()
    gamma = scn.gamma()
    sigma = scn.sigma()
    phi_state = scn.pointer([gamma])
    result = apply_modular_operator(ens, proj, phi_state, gamma)
    estimate = read_faux_qubit(spatial_profile(result), phi_state.grid,
                               gamma, sigma)
    with _open_out(args.out) as fh:
        write_readout_csv(fh, estimate)
    return EXIT_OK


def cmd_mzi(args) -> int:
    scn = ScenarioFile.load(args.scenario)
    mzi_scn = scn.mzi()
    real = realize(mzi_scn)
    ens = PpsEnsemble(real.psi_i, real.psi_f)
    phi_state = gaussian_pointer(mzi_scn.resolved_grid(), mzi_scn.sigma)

    single = "gammas" not in scn.raw.get("coupling", {})
    if single:
        gamma = mzi_scn.gammas[0]
        result = apply_modular_operator(ens, real.A, phi_state, gamma)
        intensity = spatial_profile(result)
        with _open_out(args.out) as fh:
            write_profile_csv(fh, result.state, intensity)
        if args.oracle:
            _oracle_check(ens, real.A, phi_state, gamma, result)
        if args.plot:
            from . import figures
            figures.render_profile(result.state.grid, intensity,
                                   args.plot, title="Camera intensity profile")
    else:
        rows = pointer_response_curve(mzi_scn)
        with _open_out(args.out) as fh:
            write_response_csv(fh, rows)
        if args.oracle:
            gamma = mzi_scn.gammas[-1]
            result = apply_modular_operator(ens, real.A, phi_state, gamma)
            _oracle_check(ens, real.A, phi_state, gamma, result)
        if args.plot:
            from . import figures
            figures.render_curve([r.gamma for r in rows],
                                 [r.centroid for r in rows],
                                 args.plot, "image centroid",
                                 "Camera centroid vs displacement")
    return EXIT_OK


_COMMANDS = {
    "weak-value": cmd_weak_value,
    "modular-value": cmd_modular_value,
    "profile": cmd_profile,
    "persistence": cmd_persistence,
    "orthogonality": cmd_orthogonality,
    "faux-read": cmd_faux_read,
    "mzi": cmd_mzi,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ScenarioError as exc:
        print(f"scenario error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DomainError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
