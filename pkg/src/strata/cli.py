"""Command-line interface.

Exit codes: 0 success, 1 computation error (prints the error code of the
failing operation), 2 argument parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .errors import StrataError
from .exact import PiScalar
from . import series as series_mod
from .cache import CacheFile
from .combinatorics import genus_of, signatures_of_genus
from .hurwitz import h_p1_general, h_p1_two, hurwitz_tuple_oracle
from .oracle import count_covers_brute
from .siegel_veech import c_area, c_sc_hom, configuration_rows, d_value
from .volumes import a_value, canonical, v_hyp, v_spin, v_spin_delta, v_stratum
from . import verify as verify_mod


def _parse_mu(text: str):
    try:
        parts = tuple(int(p) for p in text.split(",") if p != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad signature {text!r}")
    if not parts and text.strip() != "":
        raise argparse.ArgumentTypeError(f"bad signature {text!r}")
    return parts


def _fmt_value(value: PiScalar) -> str:
    unit = f"pi^{value.pi_power}" if value.pi_power else ""
    return f"{value.coeff}" + (f" * {unit}" if unit else "")


def _value_json(mu, value: PiScalar, component: str, method: str) -> dict:
    mu = tuple(mu)
    return {
        "mu": list(mu),
        "g": genus_of(mu),
        "n": len(mu),
        "component": component,
        "value": value.to_json(),
        "method": method,
    }


def _open_cache(args):
    path = os.environ.get("STRATA_CACHE") or getattr(args, "cache", None)
    if not path:
        return None
    return CacheFile.load(path)


def _close_cache(cache):
    if cache is not None and cache.dirty:
        cache.save()


def _cmd_volume(args) -> int:
    mu = args.mu
    cache = _open_cache(args)
    component = args.component
    kind = "vdelta" if component == "delta" else "v"
    cache_component = "" if component in ("all", "delta") else component
    value = None
    if cache is not None:
        value = cache.get(kind, mu, cache_component)
    method = args.method
    if value is None:
        if component == "all":
            value = v_stratum(mu, method=method)
        elif component == "delta":
            value = v_spin_delta(mu)
        elif component in ("odd", "even"):
            value = v_spin(mu, component)
        else:
            value = v_hyp(mu)
        if cache is not None:
            cache.put(kind, mu, value, cache_component)
    _close_cache(cache)
    if args.json:
        print(json.dumps(_value_json(mu, value, component, method)))
    else:
        label = {"all": "v", "delta": "v_delta", "odd": "v_odd",
                 "even": "v_even", "hyp": "v_hyp"}[component]
        print(f"{label}({','.join(map(str, mu))}) = {_fmt_value(value)}")
    return 0


def _cmd_sv_area(args) -> int:
    mu = args.mu
    cache = _open_cache(args)
    if cache is not None:
        cached_d = cache.get("d", mu)
        cached_a = cache.get("a", mu)
    else:
        cached_d = cached_a = None
    d = cached_d.coeff if cached_d is not None else d_value(mu)
    a = cached_a.coeff if cached_a is not None else a_value(mu)
    if cache is not None:
        cache.put("d", mu, PiScalar(d, 0))
        cache.put("a", mu, PiScalar(a, 0))
    _close_cache(cache)
    value = PiScalar(-Fraction(1, 4) * d / a, -2)
    g, n = genus_of(mu), len(mu)
    routes_agree = None
    if g <= 4 and n <= 3:
        from .siegel_veech import c_area_partial2
        routes_agree = c_area_partial2(mu) == value
    if args.json:
        payload = _value_json(mu, value, "all", "delta_recursion")
        payload["routes_agree"] = routes_agree
        print(json.dumps(payload))
    else:
        note = "" if routes_agree is None else f"  (routes_agree: {routes_agree})"
        print(f"c_area({','.join(map(str, mu))}) = {_fmt_value(value)}{note}")
    return 0


def _cmd_sv_sc(args) -> int:
    mu = args.mu
    i, j = args.zeros
    # zeros are 1-indexed on the command line
    i -= 1
    j -= 1
    hom = c_sc_hom(mu, i, j)
    rows = configuration_rows(mu, i, j)
    if args.json:
        payload = {
            "mu": list(mu),
            "zeros": [i + 1, j + 1],
            "c_hom": {"num": str(hom.numerator), "den": str(hom.denominator)},
            "note": "c_phy (multiplicity-weighted variant) is not computed",
            "configurations": [
                {
                    "parts": [list(p) for p in r["parts"]],
                    "ordered_count": r["ordered_count"],
                    "hom_share": {"num": str(r["hom_share"].numerator),
                                  "den": str(r["hom_share"].denominator)},
                    "area_sum": r["area_sum"].to_json(),
                }
                for r in rows
            ],
        }
        print(json.dumps(payload))
    else:
        print(f"c_hom({','.join(map(str, mu))}; zeros {i + 1},{j + 1}) = {hom}")
        print("note: c_phy (multiplicity-weighted variant) is not computed")
        for r in rows:
            parts = " + ".join(str(list(p)) for p in r["parts"])
            print(f"  parts [{parts}]  share {r['hom_share']}  "
                  f"area_sum {_fmt_value(r['area_sum'])}")
    return 0


def _cmd_hurwitz(args) -> int:
    zeros = args.zeros
    poles = args.poles
    cache = _open_cache(args)
    if len(zeros) == 2:
        key_component = ",".join(map(str, sorted(poles)))
        cached = cache.get("hp1", zeros, key_component) if cache is not None else None
        if cached is not None:
            value = int(cached.coeff)
        else:
            value = h_p1_two(zeros[0], zeros[1], tuple(sorted(poles)))
            if cache is not None:
                cache.put("hp1", zeros, PiScalar(Fraction(value), 0), key_component)
    else:
        value = h_p1_general(zeros, poles)
    _close_cache(cache)
    lines = {"zeros": list(zeros), "poles": list(poles), "value": str(value)}
    degree = sum(poles)
    if len(zeros) == 2 and degree <= 7:
        oracle = hurwitz_tuple_oracle(zeros[0], zeros[1], tuple(sorted(poles)))
        lines["oracle"] = {"num": str(oracle.numerator),
                           "den": str(oracle.denominator)}
    if args.json:
        print(json.dumps(lines))
    else:
        print(f"h({zeros}; {poles}) = {value}")
        if "oracle" in lines:
            print(f"oracle (automorphism-weighted) = "
                  f"{lines['oracle']['num']}/{lines['oracle']['den']}")
    return 0


_SERIES = {
    "A": lambda order: series_mod.A_series(order),
    "Q": lambda order: series_mod.Q_series(order),
    "PB": lambda order: series_mod.volume_kernel(order),
    "PZ": lambda order: series_mod.spin_kernel(order),
    "Delta": lambda order: series_mod.delta_series(order if order % 2 == 0
                                                   else order - 1),
    "D": lambda order: series_mod.d_min_series(order),
}


def _cmd_series(args) -> int:
    series = _SERIES[args.which](args.order)
    out = []
    for e in range(series.min_exp, series.trunc_order + 1):
        c = series.coeff(e)
        if c != 0:
            out.append((e, c))
    if args.json:
        print(json.dumps({"which": args.which, "order": args.order,
                          "terms": [{"exp": e,
                                     "num": str(c.numerator),
                                     "den": str(c.denominator)}
                                    for e, c in out]}))
    else:
        for e, c in out:
            print(f"{e}: {c.numerator}/{c.denominator}")
    return 0


def _cmd_oracle(args) -> int:
    rows = []
    for d in range(1, args.dmax + 1):
        count = count_covers_brute(args.profile, d, connected=args.connected)
        rows.append((d, count))
    if args.json:
        print(json.dumps({"profile": list(args.profile),
                          "connected": args.connected,
                          "counts": [{"d": d,
                                      "num": str(c.numerator),
                                      "den": str(c.denominator)}
                                     for d, c in rows]}))
    else:
        for d, c in rows:
            print(f"d={d}: {c}")
    return 0


def _cmd_table(args) -> int:
    rows = []
    for g in range(1, args.gmax + 1):
        sigs = signatures_of_genus(g)
        if g == 1:
            sigs = [(0,)]
        for mu in sigs:
            v = v_stratum(mu)
            ca = c_area(mu)
            hom = c_sc_hom(mu, 0, 1) if len(mu) >= 2 else None
            rows.append((g, mu, v, ca, hom))
    if args.format == "json":
        print(json.dumps([
            {
                "g": g,
                "mu": list(mu),
                "volume": v.to_json(),
                "c_area": ca.to_json(),
                "c_hom": None if hom is None else str(hom),
            }
            for g, mu, v, ca, hom in rows
        ]))
    else:
        print("g;mu;v;v_unit;c_area;c_area_unit;c_hom")
        for g, mu, v, ca, hom in rows:
            mu_str = "[" + ",".join(map(str, mu)) + "]"
            print(f"{g};{mu_str};{v.coeff};pi^{v.pi_power};"
                  f"{ca.coeff};pi^{ca.pi_power};"
                  f"{'' if hom is None else hom}")
    return 0


def _cmd_verify(args) -> int:
    numbers = verify_mod.SUITES[args.suite]
    results = verify_mod.run_criteria(numbers, gmax=args.gmax)
    ok_all = True
    for res in results:
        status = "PASS" if res["ok"] else "FAIL"
        print(f"{status} criterion {res['number']}: {res['name']} "
              f"[{res['seconds']:.2f}s] {res['detail']}")
        ok_all = ok_all and res["ok"]
    return 0 if ok_all else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strata",
        description="Exact volumes and Siegel-Veech constants for strata of "
                    "Abelian differentials")
    sub = parser.add_subparsers(dest="command", required=True)

    p_vol = sub.add_parser("volume", help="stratum volume")
    p_vol.add_argument("mu", type=_parse_mu)
    p_vol.add_argument("--component", default="all",
                       choices=["all", "odd", "even", "hyp", "delta"])
    p_vol.add_argument("--method", default="backbone",
                       choices=["backbone", "d2", "both"])
    p_vol.add_argument("--json", action="store_true")
    p_vol.add_argument("--cache")
    p_vol.set_defaults(func=_cmd_volume)

    p_sva = sub.add_parser("sv-area", help="area Siegel-Veech constant")
    p_sva.add_argument("mu", type=_parse_mu)
    p_sva.add_argument("--json", action="store_true")
    p_sva.add_argument("--cache")
    p_sva.set_defaults(func=_cmd_sv_area)

    p_svs = sub.add_parser("sv-sc",
                           help="saddle-connection constants for a zero pair")
    p_svs.add_argument("mu", type=_parse_mu)
    p_svs.add_argument("--zeros", nargs=2, type=int, required=True,
                       metavar=("I", "J"))
    p_svs.add_argument("--json", action="store_true")
    p_svs.set_defaults(func=_cmd_sv_sc)

    p_hur = sub.add_parser("hurwitz", help="genus-zero covering count")
    p_hur.add_argument("--zeros", type=_parse_mu, required=True)
    p_hur.add_argument("--poles", type=_parse_mu, required=True)
    p_hur.add_argument("--json", action="store_true")
    p_hur.add_argument("--cache")
    p_hur.set_defaults(func=_cmd_hurwitz)

    p_ser = sub.add_parser("series", help="named generating series")
    p_ser.add_argument("--which", required=True, choices=sorted(_SERIES))
    p_ser.add_argument("--order", type=int, required=True)
    p_ser.add_argument("--json", action="store_true")
    p_ser.set_defaults(func=_cmd_series)

    p_ora = sub.add_parser("oracle", help="brute-force cover counts")
    ora_sub = p_ora.add_subparsers(dest="oracle_command", required=True)
    p_cov = ora_sub.add_parser("covers")
    p_cov.add_argument("--profile", type=_parse_mu, required=True)
    p_cov.add_argument("--dmax", type=int, default=5)
    p_cov.add_argument("--connected", action="store_true")
    p_cov.add_argument("--json", action="store_true")
    p_cov.set_defaults(func=_cmd_oracle)

    p_tab = sub.add_parser("table", help="volumes and constants per genus")
    p_tab.add_argument("--gmax", type=int, required=True)
    p_tab.add_argument("--format", default="csv", choices=["csv", "json"])
    p_tab.set_defaults(func=_cmd_table)

    p_ver = sub.add_parser("verify", help="run acceptance checks")
    p_ver.add_argument("--suite", default="core",
                       choices=sorted(verify_mod.SUITES))
    p_ver.add_argument("--gmax", type=int, default=None)
    p_ver.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except StrataError as err:
        print(f"error: {err.code}: {err}", file=sys.stderr)
        return 1
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
