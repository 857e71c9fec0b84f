"""Command line interface: ``frobenius-fte SUBCOMMAND --ring FILE ...``.

Ideals are given with ``--ideal "f; g; h"`` or ``--ideal-file``; sequence
subcommands read the same flag as an ordered list.  Ideals of R = S/A are
always lifted to S by adding the generators of A.

Exit status: 0 success/PASS, 1 FAIL or a false verdict, 2 usage error,
3 INCONCLUSIVE (an exponent cap was hit), 4 invalid input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from . import experiments as ex
from .algebra import ExponentOverflowError, as_order
from .frobenius import (
    FrobeniusConfig,
    InconclusiveError,
    frobenius_closure,
    frobenius_preimage,
    fte,
    hsl0_from_closure,
)
from .groebner import GroebnerLimitError
from .ideals import Ideal, RingSpec, colon, krull_dimension, saturate
from .parsing import ParseError, parse_ideal
from .sequences import (
    ElementSequence,
    SamplerExhaustedError,
    is_filter_regular,
    is_parameter_part,
)
from .serialize import RingFileError, emit_report, load_ring

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE, EXIT_INPUT = 0, 1, 2, 3, 4


def _gens(args, ring: RingSpec, flag: str = "ideal") -> list:
    text = getattr(args, flag, None)
    path = getattr(args, f"{flag}_file", None)
    if path:
        text = Path(path).read_text(encoding="utf-8")
    if text is None:
        raise ValueError(f"--{flag.replace('_', '-')} is required")
    return parse_ideal(text, ring.ambient)


def _ideal(args, ring: RingSpec) -> Ideal:
    return Ideal(ring.ambient, _gens(args, ring))


def _sequence(args, ring: RingSpec) -> ElementSequence:
    return ElementSequence(ring, tuple(_gens(args, ring)))


def _fcfg(args) -> FrobeniusConfig:
    return FrobeniusConfig(max_exponent=args.max_exponent, lookahead=args.lookahead, seed=args.seed)


def _scfg(args) -> ex.SurveyConfig:
    return ex.SurveyConfig(
        seed=args.seed, max_degree=args.max_degree, threads=args.threads, frobenius=_fcfg(args)
    )


def _closure_dict(res) -> dict:
    return {
        "closure": [str(g) for g in res.closure.gens],
        "chain": [{"e": e, "generators": [str(g) for g in phi.gens]} for e, phi in res.chain],
        "stabilized_at": res.stabilized_at,
        "fte_candidate": res.fte_candidate,
        "status": str(res.status),
        "notes": list(res.notes),
    }


def _h_value(args, ring):
    if args.h is None:
        return None, "missing"
    if args.h == "estimate":
        est = ex.estimate_h(ring, args.h_samples, _scfg(args))
        return est.value, est.provenance
    return int(args.h), "user"


# ---------------------------------------------------------------------------
# subcommands; each returns (payload, exit code)


def cmd_gb(args, ring):
    I = ring.lift(_ideal(args, ring))
    gb = I.gb(as_order(args.order))
    return {"ring": str(ring), "order": args.order,
            "groebner_basis": [g.to_string(args.order) for g in gb]}, EXIT_OK


def cmd_dim(args, ring):
    if args.ideal is None and args.ideal_file is None:
        return {"ring": str(ring), "dim": ring.dim}, EXIT_OK
    I = ring.lift(_ideal(args, ring))
    return {"ring": str(ring), "ideal": I.strings(), "dim": krull_dimension(I)}, EXIT_OK


def cmd_colon(args, ring):
    I = ring.lift(_ideal(args, ring))
    J = Ideal(ring.ambient, _gens(args, ring, "by"))
    return {"colon": colon(I, J).strings()}, EXIT_OK


def cmd_sat(args, ring):
    I = ring.lift(_ideal(args, ring))
    J = None
    if args.by is not None or args.by_file is not None:
        J = Ideal(ring.ambient, _gens(args, ring, "by"))
    sat, steps = saturate(I, J)
    return {"saturation": sat.strings(), "steps": steps}, EXIT_OK


def cmd_preimage(args, ring):
    J = ring.lift(_ideal(args, ring))
    return {"e": args.e, "preimage": frobenius_preimage(J, args.e).strings()}, EXIT_OK


def cmd_fclosure(args, ring):
    res = frobenius_closure(ring, _ideal(args, ring), _fcfg(args))
    return _closure_dict(res), EXIT_OK if res.certified else EXIT_INCONCLUSIVE


def cmd_fte(args, ring):
    res = fte(ring, _ideal(args, ring), _fcfg(args))
    out = {"fte": res.fte, "status": str(res.status),
           "witnesses": [[str(g), e] for g, e in res.witnesses],
           **_closure_dict(res.closure)}
    return out, EXIT_OK if res.certified else EXIT_INCONCLUSIVE


def cmd_hsl0(args, ring):
    I = _ideal(args, ring)
    res = frobenius_closure(ring, I, _fcfg(args))
    if not res.certified:
        return {"hsl0": None, "status": str(res.status)}, EXIT_INCONCLUSIVE
    return {"hsl0": hsl0_from_closure(ring, I, res), "status": str(res.status)}, EXIT_OK


def cmd_filter_check(args, ring):
    v = is_filter_regular(_sequence(args, ring))
    return v.to_dict(), EXIT_OK if v.ok else EXIT_FAIL


def cmd_param_check(args, ring):
    v = is_parameter_part(_sequence(args, ring))
    return v.to_dict(), EXIT_OK if v.ok else EXIT_FAIL


def _exit_for(verdict: str) -> int:
    return {ex.PASS: EXIT_OK, ex.SKIPPED: EXIT_OK, ex.FAIL: EXIT_FAIL}.get(verdict, EXIT_INCONCLUSIVE)


def cmd_survey(args, ring):
    h, h_src = _h_value(args, ring)
    rep = ex.uniform_bound_survey(ring, args.t, args.samples, _scfg(args), h, args.c, h_src)
    return rep, _exit_for(rep.verdict)


def cmd_sweep(args, ring):
    rep = ex.power_family_sweep(ring, _sequence(args, ring), args.max_n, _fcfg(args), args.threads)
    return rep, _exit_for(rep.verdict)


def cmd_annihilation(args, ring):
    checks = ex.nilpotent_annihilation_check(ring, _sequence(args, ring), args.n0, _fcfg(args))
    if any(c.holds is None for c in checks):
        verdict = ex.INCONCLUSIVE
    else:
        verdict = ex.PASS if all(c.holds for c in checks) else ex.FAIL
    payload = {"n0": args.n0, "prefixes": [vars(c) for c in checks], "verdict": verdict}
    return payload, _exit_for(verdict)


def cmd_bound(args, ring):
    h, h_src = _h_value(args, ring)
    survey = ex.uniform_bound_survey(ring, args.t, args.samples, _scfg(args))
    rep = ex.bound_report(ring, args.t, h, args.c, survey, h_src)
    return rep, _exit_for(rep.verdict)


def cmd_regular_case(args, ring):
    h, h_src = _h_value(args, ring)
    if h is None:
        raise ValueError("--h is required (an integer or 'estimate')")
    r = ex.regular_case(ring, _sequence(args, ring), h, _fcfg(args))
    payload = {"hsl0": r.hsl0, "h": h, "h_provenance": h_src, "ok": r.ok}
    return payload, EXIT_OK if r.ok else EXIT_FAIL


COMMANDS = {
    "gb": (cmd_gb, "reduced Groebner basis of I + A"),
    "dim": (cmd_dim, "Krull dimension of R/I (or R); the unit ideal gives -1"),
    "colon": (cmd_colon, "colon ideal (I : J) in R"),
    "sat": (cmd_sat, "saturation (I : J^inf), J defaults to the maximal ideal"),
    "preimage": (cmd_preimage, "{f : f^(p^e) in I + A}"),
    "fclosure": (cmd_fclosure, "Frobenius closure of I with its stabilization chain"),
    "fte": (cmd_fte, "Frobenius test exponent of I"),
    "hsl0": (cmd_hsl0, "HSL number of H^0_m(R/I) relative to R"),
    "filter-check": (cmd_filter_check, "is the sequence filter regular"),
    "param-check": (cmd_param_check, "is the sequence part of a system of parameters"),
    "survey": (cmd_survey, "Fte over sampled filter regular sequences"),
    "sweep": (cmd_sweep, "Fte over the power family of a sequence"),
    "lemma31": (cmd_annihilation, "m^(2^i n0) annihilation check on H^0 of each prefix"),
    "bound": (cmd_bound, "compare a survey against (d - t) h + c"),
    "regular-case": (cmd_regular_case, "HSL of H^0 of R/(regular sequence) <= h"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", required=True, help="JSON ring file")
    common.add_argument("--ideal", help='generators, e.g. "y; z"')
    common.add_argument("--ideal-file")
    common.add_argument("--by", help="second ideal for colon/sat")
    common.add_argument("--by-file")
    common.add_argument("--e", type=int, default=1)
    common.add_argument("--order", choices=["grevlex", "lex"], default="grevlex")
    common.add_argument("--max-exponent", type=int, default=8)
    common.add_argument("--lookahead", type=int, default=2)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=25)
    common.add_argument("--max-degree", type=int, default=2)
    common.add_argument("--format", choices=["json", "csv", "text"], default="json")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--t", type=int, default=None, help="sequence length for survey/bound")
    common.add_argument("--h", default=None, help="integer, or 'estimate'")
    common.add_argument("--h-samples", type=int, default=10)
    common.add_argument("--c", type=int, default=None)
    common.add_argument("--n0", type=int, default=0)
    common.add_argument("--max-n", type=int, default=3)
    common.add_argument("--output", help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="frobenius-fte",
        description="Frobenius closures and test exponents over F_p.",
        epilog="exit status: 0 ok/PASS, 1 FAIL, 2 usage, 3 INCONCLUSIVE, 4 bad input",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_, description=help_)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    fn = COMMANDS[args.command][0]
    if args.command in ("survey", "bound") and args.t is None:
        print("error: --t is required", file=sys.stderr)
        return EXIT_USAGE
    try:
        ring = load_ring(args.ring)
        payload, code = fn(args, ring)
    except (RingFileError, ParseError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InconclusiveError, SamplerExhaustedError, GroebnerLimitError, ExponentOverflowError) as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    data = emit_report(payload, args.format)
    if args.output:
        Path(args.output).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
