"""Command-line front end: ``qsoa <subcommand> ...``.

Exit codes: 0 on success, 1 on a domain error (the error class name is
printed on stderr), 2 on a parse error.
"""

import argparse
import json
import sys

from .blocks import alpha_root_set, block_report, semisimplicity_check
from .center import DEFAULT_MAX_SPAN, CentralizerQuery, centralizer_basis
from .errors import ParseError, QsoaError
from .parsing import parse_scalar, parse_word
from .pbw import CenterPolynomial, P_ZERO, PbwElement, multiply, reduction_system
from .repn import (
    build_simple,
    c0_zero_counterexample,
    composition_series,
    finite_dim_test,
    joint_kernel_dimension,
)
from .rewrite import verify_confluence
from .verma import Weight, alpha, maximal_vectors, structure_vector

__all__ = ["main", "build_parser"]


def _weight(text):
    return Weight(parse_scalar(text))


def _poly(text):
    return CenterPolynomial.parse(text)


def _bounds(text):
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ParseError(f"bounds must be five integers, got {text!r}") from None
    if len(vals) != 5 or min(vals) < 0:
        raise ParseError(f"bounds must be five nonnegative integers, got {text!r}")
    return vals


def _weight_json(w):
    cls = w.classification
    return {
        "value": str(w),
        "signed_power": None if cls is None else {"eps": cls[0], "n": cls[1]},
    }


def _weight_line(name, w):
    return f"# {name} = {w}: {w.describe()}"


def _pbw_json(x):
    return {
        "text": str(x),
        "terms": [
            {"monomial": list(m), "coeff": str(c)} for m, c in sorted(x.terms.items())
        ],
    }


# each command returns (text, json-able object)


def cmd_normal_form(a):
    p = _poly(a.p) if a.p else P_ZERO
    word = parse_word(a.expr)
    x = PbwElement.from_free(reduction_system(p).normal_form_word(word))
    return str(x), {"input": word, "normal_form": _pbw_json(x)}


def cmd_confluence(a):
    p = _poly(a.p) if a.p else P_ZERO
    rep = verify_confluence(reduction_system(p))
    listed = len(rep.paper)
    extra = [w for w in rep.detected_words() if w not in {x.word for x in rep.paper}]
    det_ok = sum(x.resolved for x in rep.detected)
    lines = [
        f"{rep.paper_resolved}/{listed} resolved",
        f"detected overlaps: {len(rep.detected)} ({det_ok} resolved)",
        f"detected words not in the listed 16: {', '.join(extra) if extra else 'none'}",
    ]
    obj = {
        "listed": {x.word: x.resolved for x in rep.paper},
        "listed_resolved": rep.paper_resolved,
        "detected": sorted({x.word: x.resolved for x in rep.detected}.items()),
        "extra_detected": extra,
        "all_resolved": rep.all_resolved,
    }
    return "\n".join(lines), obj


def cmd_multiply(a):
    p = _poly(a.p)
    sys_ = reduction_system(p)
    x = PbwElement.from_free(sys_.normal_form_word(parse_word(a.lhs)))
    y = PbwElement.from_free(sys_.normal_form_word(parse_word(a.rhs)))
    z = multiply(x, y, p)
    return str(z), {"product": _pbw_json(z)}


def cmd_alpha(a):
    p, r = _poly(a.p), _weight(a.r)
    v = alpha(p, r, a.m)
    return f"{v}\n{_weight_line('r', r)}", {"alpha": str(v), "m": a.m, "r": _weight_json(r)}


def cmd_alpha_roots(a):
    p, r = _poly(a.p), _weight(a.r)
    roots = sorted(alpha_root_set(p, r))
    text = "{" + ", ".join(map(str, roots)) + "}"
    return f"{text}\n{_weight_line('r', r)}", {"roots": roots, "r": _weight_json(r)}


def cmd_maximal_vectors(a):
    p, r = _poly(a.p), _weight(a.r)
    vecs = maximal_vectors(p, r, a.n)
    text = "\n".join(str(v) for v in vecs) if vecs else "none"
    return f"{text}\n{_weight_line('r', r)}", {
        "n": a.n,
        "r": _weight_json(r),
        "vectors": [str(v) for v in vecs],
    }


def cmd_structure_vector(a):
    p, r = _poly(a.p), _weight(a.r)
    v = structure_vector(p, r, a.n)
    return f"{v}\n{_weight_line('r', r)}", {"n": a.n, "r": _weight_json(r), "vector": str(v)}


def cmd_simple(a):
    p, r = _poly(a.p), _weight(a.r)
    found = finite_dim_test(p, r)
    if found is None:
        return f"infinite dimensional\n{_weight_line('r', r)}", {
            "r": _weight_json(r),
            "finite": False,
        }
    m = build_simple(p, r)
    i, dim = found
    weights = sorted({str(w) for w in m.k_eigenvalues()})
    lines = [
        f"dim {dim}",
        f"first root index {i}",
        f"K eigenvalues: {', '.join(str(w) for w in m.k_eigenvalues())}",
        f"joint kernel of E, X: {joint_kernel_dimension(m)}",
        _weight_line("r", r),
    ]
    obj = {"r": _weight_json(r), "finite": True, "dim": dim, "first_root": i, "weights": weights}
    if a.matrices:
        obj["module"] = m.to_json()
        for g, rows in obj["module"]["matrices"].items():
            lines.append(f"{g} = " + "; ".join(", ".join(row) for row in rows))
    return "\n".join(lines), obj


def cmd_composition_series(a):
    p, r = _poly(a.p), _weight(a.r)
    cs = composition_series(p, r)
    lines = [
        f"V({f.weight})  dim {f.dim if f.dim is not None else 'inf'}  [{f.weight.describe()}]"
        for f in cs.factors
    ]
    lines += [f"flag: {x}" for x in cs.flags]
    obj = {
        "r": _weight_json(r),
        "factors": cs.to_json(),
        "chain": [str(w) for w in cs.chain],
        "flags": cs.flags,
    }
    return "\n".join(lines), obj


def cmd_block(a):
    p, r = _poly(a.p), _weight(a.r)
    rep = block_report(p, r)
    j = rep.to_json()
    lines = [
        f"r0 = {j['r0']}, N = {j['N']}",
        "S = {" + ", ".join(j["S"]) + "}",
        "T = {" + ", ".join(j["T"]) + "}",
        _weight_line("r", r),
    ]
    lines += [f"edge {e['from']} -- {e['to']}: {e['reason']}" for e in j["edges"]]
    j["r"] = _weight_json(r)
    return "\n".join(lines), j


def cmd_semisimple(a):
    p = _poly(a.p)
    rep = semisimplicity_check(p, a.nmax)
    lines = [f"{rep.verdict} (bounded by n_max = {a.nmax})", rep.note]
    lines += [f"witness eps={e} n={n}: m in {ms}" for e, n, ms in rep.witnesses]
    return "\n".join(lines), rep.to_json()


def cmd_center(a):
    p = _poly(a.p)
    res = centralizer_basis(CentralizerQuery(p, _bounds(a.bounds), a.max_span))
    lines = [f"dimension {res.dimension} ({res.label}, {res.candidates} candidates)"]
    lines += [str(b) for b in res.basis]
    return "\n".join(lines), res.to_json()


def cmd_counterexample(a):
    module, rep = c0_zero_counterexample()
    lattice = sorted((sorted(s, reverse=True) for s in rep["lattice"]), key=lambda s: (len(s), s))
    lines = [
        "relations: " + ("all pass" if rep["relations"].all_passed else "FAIL"),
        "submodules: " + ", ".join("{" + ", ".join(f"v{i}" for i in s) + "}" for s in lattice),
        f"complement to span(v0): {'exists' if rep['complement_to_v0'] else 'none'}",
        rep["verdict"],
    ]
    obj = {
        "module": module.to_json(),
        "relations": rep["relations"].to_json(),
        "lattice": lattice,
        "complement_to_v0": rep["complement_to_v0"],
        "verdict": rep["verdict"],
    }
    return "\n".join(lines), obj


def build_parser():
    ap = argparse.ArgumentParser(
        prog="qsoa", description="Exact computations in the quantized symplectic oscillator algebra."
    )
    ap.add_argument("--format", choices=("text", "json"), default="text")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, *args):
        sp = sub.add_parser(name)
        for flag, kw in args:
            sp.add_argument(flag, **kw)
        sp.set_defaults(fn=fn)
        return sp

    P = ("--p", {"required": True, "help": "center polynomial in C"})
    P_OPT = ("--p", {"default": None, "help": "center polynomial in C (default 0)"})
    R = ("--r", {"required": True, "help": "weight, a rational function of q"})
    N = ("--n", {"type": int, "required": True})
    add("normal-form", cmd_normal_form, ("--expr", {"required": True}), P_OPT)
    add("confluence-check", cmd_confluence, P_OPT)
    add("multiply", cmd_multiply, ("--lhs", {"required": True}), ("--rhs", {"required": True}), P)
    add("alpha", cmd_alpha, P, R, ("--m", {"type": int, "required": True}))
    add("alpha-roots", cmd_alpha_roots, P, R)
    add("maximal-vectors", cmd_maximal_vectors, P, R, N)
    add("structure-vector", cmd_structure_vector, P, R, N)
    add("simple", cmd_simple, P, R, ("--matrices", {"action": "store_true"}))
    add("composition-series", cmd_composition_series, P, R)
    add("block", cmd_block, P, R)
    add("semisimple-check", cmd_semisimple, P, ("--nmax", {"type": int, "required": True}))
    add(
        "center",
        cmd_center,
        P,
        ("--bounds", {"default": "2,2,2,2,2"}),
        ("--max-span", {"type": int, "default": DEFAULT_MAX_SPAN}),
    )
    add("counterexample-c0zero", cmd_counterexample)
    return ap


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, obj = args.fn(args)
    except ParseError as exc:
        print(f"ParseError: {exc}", file=sys.stderr)
        return 2
    except QsoaError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(obj, sort_keys=True, indent=2))
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
