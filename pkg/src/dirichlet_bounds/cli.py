"""Command line: ``python3 -m dirichlet_bounds {constants,bounds,minimizer,spectrum}``."""

import argparse
import csv
import json
import sys

import numpy as np

from . import bounds, minimizers
from .constants import constants_table
from .errors import InputError
from .io import disk_data, read_domain
from .spectra import disk_spectrum, fd_spectrum, rectangle_spectrum


def _spectrum_for(domain, kmax, h=None, extrapolate=False):
    if domain.kind == "disk":
        return disk_spectrum(domain.radius, kmax)
    sides = domain.rectangle_sides
    if sides is not None and h is None:
        return rectangle_spectrum(*sides, kmax)
    if h is None:
        raise InputError("a non-rectangular polygon needs --h for the finite-difference solver")
    return fd_spectrum(domain.polygon, h, kmax, extrapolate)


def cmd_constants(args, out):
    t = constants_table(args.dps)
    d = t.as_dict()
    d["c1_ratio"] = float(t.c1 / t.c1_proof)
    json.dump(d, out, indent=2)
    out.write("\n")


def cmd_bounds(args, out):
    dom = read_domain(args.domain)
    true = None
    if not args.no_spectrum:
        try:
            true = _spectrum_for(dom, args.kmax, args.h, args.extrapolate).cumulative()
        except InputError as exc:
            print(f"# no spectrum: {exc}", file=sys.stderr)
    if dom.kind == "disk":
        V, I, per, arcs = disk_data(dom.radius)
        reps = bounds.general_reports(V, I, per, arcs, args.kmax, args.alpha, true)
    else:
        reps = bounds.polygon_reports(dom.polygon, args.kmax, args.alpha, true)
    out.write(bounds.reports_to_csv(reps, args.alpha))


def _params(text):
    out = {}
    for item in filter(None, (text or "").split(",")):
        key, _, val = item.partition("=")
        out[key.strip()] = float(val)
    return out


def cmd_minimizer(args, out):
    p = _params(args.params)
    try:
        V, k = p["V"], p["k"]
        if args.type == "ly":
            prof = minimizers.phi_li_yau(V, k)
        elif args.type == "melas":
            prof = minimizers.phi_melas(V, p["I"], k)
        else:
            prof = minimizers.phi_corrected(V, p["eps"], p["delta"], k)
    except KeyError as exc:
        raise InputError(f"missing parameter {exc.args[0]!r}") from None
    r = np.linspace(0.0, 1.1 * prof.breakpoints[-1], args.samples)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["r", "phi"])
    for ri, fi in zip(r, prof(r)):
        w.writerow([repr(float(ri)), repr(float(fi))])


def cmd_spectrum(args, out):
    dom = read_domain(args.domain)
    S = _spectrum_for(dom, args.kmax, args.h, args.extrapolate)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["index", "eigenvalue", "errorBar"])
    for i, lam in enumerate(S.eigenvalues, 1):
        w.writerow([i, repr(float(lam)), "" if S.errors is None else repr(float(S.errors[i - 1]))])


def build_parser():
    ap = argparse.ArgumentParser(prog="dirichlet_bounds", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("constants", help="print the constant table as JSON")
    c.add_argument("--dps", type=int, default=None, help="evaluate with mpmath at this many digits")
    c.set_defaults(func=cmd_constants)

    b = sub.add_parser("bounds", help="eigenvalue-sum bounds as CSV")
    b.add_argument("--domain", required=True)
    b.add_argument("--kmax", type=int, required=True)
    b.add_argument("--alpha", type=float, default=0.5)
    b.add_argument("--h", type=float, default=None, help="grid spacing for non-rectangular polygons")
    b.add_argument("--extrapolate", action="store_true")
    b.add_argument("--no-spectrum", action="store_true", help="skip the trueSum column")
    b.set_defaults(func=cmd_bounds)

    m = sub.add_parser("minimizer", help="radial minimizer samples as CSV")
    m.add_argument("--type", choices=("ly", "melas", "corrected"), required=True)
    m.add_argument("--params", required=True, help="e.g. V=1,k=10,I=0.1667 or V=1,k=10,eps=1e-3,delta=0.5")
    m.add_argument("--emit", choices=("csv",), default="csv")
    m.add_argument("--samples", type=int, default=201)
    m.set_defaults(func=cmd_minimizer)

    s = sub.add_parser("spectrum", help="Dirichlet eigenvalues as CSV")
    s.add_argument("--domain", required=True)
    s.add_argument("--kmax", type=int, required=True)
    s.add_argument("--h", type=float, default=None)
    s.add_argument("--extrapolate", action="store_true")
    s.set_defaults(func=cmd_spectrum)
    return ap


def main(argv=None, out=None):
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out or sys.stdout)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0
