"""Command line workbench.

Subcommands cover the single-knot operations (poly, reps, h1-dbc, obstruct)
and a parallel batch runner over a corpus file.  Every report is built as a
JSON document with a fixed field order; text output is a rendering of the
same document.  Exit codes: 0 for any computed verdict, 1 for usage or
input errors, 2 for an empty representation enumeration, 3 when some batch
jobs failed.
"""

import argparse
import json
import os
import sys
from multiprocessing import Pool

from .cache import NullCache, ResultCache, digest_key
from .corpus import load_corpus, resolve_diagram
from .diagrams import h1_double_branched_cover, parse_pd, wirtinger_presentation
from .factor import factor_over_q
from .laurent import normalize_up_to_unit
from .obstruct import (
    ObstructionVerdict,
    _is_prime,
    _jsonable,
    free_period_report,
    murasugi_modp,
    orbit_criterion,
    period_obstruction_pipeline,
    transfer_fixed_bound,
)
from .reps import (
    Representation,
    cycle_type,
    dihedral_classes,
    enumerate_perm_rep_classes,
    identity_matrix,
    trivial_representation,
)
from .rings import Fp, QQ, ZZ, cyclotomic_ring
from .twisted import classical_alexander, delta0, twisted_alexander, wada_pair


class UsageError(Exception):
    pass


class EmptyEnumeration(Exception):
    pass


# -- selectors ---------------------------------------------------------------------


def parse_ring(text):
    if text == "Z":
        return ZZ
    if text == "Q":
        return QQ
    if text.startswith("Fp:"):
        p = _positive_int(text[3:], "Fp modulus")
        return Fp(p)
    if text.startswith("cyc:"):
        q = _positive_int(text[4:], "cyclotomic order")
        return cyclotomic_ring(q)
    raise UsageError("unknown ring %r (expected Z, Q, Fp:<p>, or cyc:<q>)" % text)


def _positive_int(text, what):
    try:
        v = int(text)
    except ValueError:
        raise UsageError("%s must be an integer, got %r" % (what, text))
    if v < 2:
        raise UsageError("%s must be at least 2" % what)
    return v


def parse_rep_selector(text):
    parts = text.split(":")
    kind = parts[0]
    if kind == "trivial":
        dim = int(parts[1]) if len(parts) > 1 else 1
        if dim < 1:
            raise UsageError("trivial representation dimension must be positive")
        return {"kind": "trivial", "dim": dim}
    if kind == "dihedral":
        if len(parts) != 2:
            raise UsageError("dihedral selector is dihedral:<p>")
        return {"kind": "dihedral", "p": _positive_int(parts[1], "dihedral p")}
    if kind == "perm":
        if len(parts) not in (2, 3):
            raise UsageError("perm selector is perm:<n>[:any|alternating|symmetric]")
        image = parts[2] if len(parts) == 3 else "any"
        if image not in ("any", "alternating", "symmetric"):
            raise UsageError("perm image constraint must be any, alternating, or symmetric")
        return {"kind": "perm", "degree": _positive_int(parts[1], "perm degree"), "image": image}
    if kind == "file":
        if len(parts) < 2:
            raise UsageError("file selector is file:<path>")
        return {"kind": "file", "path": text[len("file:"):]}
    raise UsageError("unknown representation selector %r" % text)


def _rep_from_file(path, presentation):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError("cannot read representation file: %s" % exc)
    except json.JSONDecodeError as exc:
        raise UsageError("representation file is not valid JSON: %s" % exc)
    images = data.get("images")
    if not isinstance(images, list):
        raise UsageError("representation file needs an 'images' matrix list")
    rep = Representation(ZZ, images, data.get("inv_images"))
    if len(rep.images) != presentation.num_generators:
        raise UsageError(
            "representation has %d images but the presentation has %d generators"
            % (len(rep.images), presentation.num_generators)
        )
    if not rep.verify(presentation):
        raise UsageError("representation does not satisfy the relators")
    return rep


def representation_classes(diagram, presentation, selector):
    """(label, Representation over Z) pairs for a parsed selector."""
    kind = selector["kind"]
    if kind == "trivial":
        n = selector["dim"]
        ident = identity_matrix(ZZ, n)
        rep = Representation(ZZ, [ident] * presentation.num_generators)
        return [("trivial:%d" % n if n > 1 else "trivial", rep)]
    if kind == "dihedral":
        reps = dihedral_classes(diagram, selector["p"])
        return [
            ("dihedral:%d#%d" % (selector["p"], i), rep)
            for i, rep in enumerate(reps)
        ]
    if kind == "perm":
        classes = enumerate_perm_rep_classes(
            presentation, selector["degree"], selector["image"]
        )
        out = []
        for i, pr in enumerate(classes):
            ctype = "+".join(str(c) for c in sorted(cycle_type(pr.images[0]), reverse=True))
            out.append(
                ("perm:%d#%d(%s)" % (selector["degree"], i, ctype), pr.to_matrices(ZZ))
            )
        return out
    if kind == "file":
        return [("file:" + selector["path"], _rep_from_file(selector["path"], presentation))]
    raise AssertionError(kind)


def _pd_tuples(diagram):
    return [list(t) for t in diagram.tuples]


# -- single-knot commands ------------------------------------------------------


def _factorization_json(poly):
    if poly.ring.kind not in ("Z", "Q"):
        return None
    unit, factors = factor_over_q(poly)
    return {
        "unit": unit.to_string(),
        "factors": [[f.to_string(), m] for f, m in factors],
    }


def cmd_poly(args):
    diagram = resolve_diagram(args.knot, args.corpus)
    pres = wirtinger_presentation(diagram)
    selector = parse_rep_selector(args.rep)
    ring = parse_ring(args.ring)
    classes = representation_classes(diagram, pres, selector)
    if not classes:
        raise EmptyEnumeration("no representations match %r" % args.rep)
    out = []
    for label, rep in classes:
        if ring != rep.ring:
            rep = rep.change_ring(ring)
        d0 = delta0(pres, rep)
        num, den, j = wada_pair(pres, rep)
        delta = twisted_alexander(pres, rep)
        out.append(
            {
                "class": label,
                "delta0": d0.to_string(),
                "wada_numerator": normalize_up_to_unit(num).to_string(),
                "wada_denominator": den.to_string(),
                "deleted_generator": j,
                "delta": delta.to_string(),
                "factorization": _factorization_json(delta),
            }
        )
    return {
        "command": "poly",
        "knot": args.knot,
        "rep": args.rep,
        "ring": args.ring,
        "classes": out,
    }


def cmd_reps(args):
    diagram = resolve_diagram(args.knot, args.corpus)
    pres = wirtinger_presentation(diagram)
    selector = parse_rep_selector(args.rep)
    classes = representation_classes(diagram, pres, selector)
    entries = []
    for label, rep in classes:
        entries.append({"class": label, "dim": rep.dim})
    report = {
        "command": "reps",
        "knot": args.knot,
        "rep": args.rep,
        "count": len(entries),
        "classes": entries,
    }
    if not entries:
        raise EmptyEnumeration(report)
    return report


def cmd_h1(args):
    diagram = resolve_diagram(args.knot, args.corpus)
    factors = h1_double_branched_cover(diagram)
    order = 1
    for f in factors:
        order *= f
    return {
        "command": "h1-dbc",
        "knot": args.knot,
        "invariant_factors": factors,
        "order": order,
    }


def _quotient_forced_trivial(delta, q):
    """True when the mod-q screen admits only a constant quotient polynomial.

    Every surviving (lambda, quotient) witness must have a constant quotient
    and a degree budget that pins the integral quotient to degree zero; a
    degree-zero quotient of a normalized knot polynomial is 1.
    """
    v = murasugi_modp(delta, q, q)
    if v.obstructed:
        return False
    deg = normalize_up_to_unit(delta).span()
    for w in v.certificate["witnesses"]:
        if w["quotient_mod_p"].span() != 0:
            return False
        if deg - (q - 1) * (w["lambda"] - 1) != 0:
            return False
    return True


def _verdict_report(args, mode, verdict, digest_parts):
    return {
        "criterion": verdict.criterion,
        "inputs_digest": digest_key(*digest_parts),
        "status": verdict.status,
        "certificate": _jsonable(verdict.certificate),
        "command": "obstruct",
        "mode": mode,
        "knot": args.knot,
    }


def cmd_obstruct_period(args):
    diagram = resolve_diagram(args.knot, args.corpus)
    pres = wirtinger_presentation(diagram)
    classical = classical_alexander(diagram)
    digest_parts = [
        "period",
        _pd_tuples(diagram),
        args.q,
        args.criterion,
        args.rep or "",
        args.lambda_max or 0,
    ]
    if args.criterion == "orbit":
        selector = parse_rep_selector(args.rep or "dihedral:5")
        if selector["kind"] != "dihedral":
            raise UsageError("the orbit criterion works with dihedral representations")
        p = selector["p"]
        if not _is_prime(args.q):
            raise UsageError("the orbit criterion needs a prime period")
        if p % args.q in (0, 1):
            # a setwise-fixed coloring class only forces a pointwise-fixed
            # coloring when q cannot divide p(p-1)
            raise UsageError(
                "the orbit criterion needs a period coprime to p(p-1); "
                "q=%d divides %d*(%d-1)" % (args.q, p, p)
            )
        classes = dihedral_classes(diagram, p)
        if not classes:
            raise EmptyEnumeration("no dihedral:%d classes for %r" % (p, args.knot))
        polys = []
        for rep in classes:
            polys.append(normalize_up_to_unit(twisted_alexander(pres, rep)))
        distinct = len({tuple(sorted(pl.terms.items())) for pl in polys})
        h1 = h1_double_branched_cover(diagram)
        bound = transfer_fixed_bound(h1, p, _quotient_forced_trivial(classical, args.q))
        verdict = orbit_criterion(distinct, len(classes), args.q, bound)
        return _verdict_report(args, "period", verdict, digest_parts)
    tw = d0 = n = None
    if args.rep:
        selector = parse_rep_selector(args.rep)
        classes = representation_classes(diagram, pres, selector)
        if not classes:
            raise EmptyEnumeration("no representations match %r" % args.rep)
        label, rep = classes[args.class_index]
        tw = twisted_alexander(pres, rep)
        d0 = delta0(pres, rep)
        n = rep.dim
    verdict = period_obstruction_pipeline(
        classical,
        args.q,
        twisted_delta=tw,
        delta0=d0,
        n=n,
        lambda_max=args.lambda_max,
    )
    return _verdict_report(args, "period", verdict, digest_parts)


def cmd_obstruct_free(args):
    diagram = resolve_diagram(args.knot, args.corpus)
    classical = classical_alexander(diagram)
    tw = None
    if args.rep:
        pres = wirtinger_presentation(diagram)
        selector = parse_rep_selector(args.rep)
        classes = representation_classes(diagram, pres, selector)
        if not classes:
            raise EmptyEnumeration("no representations match %r" % args.rep)
        label, rep = classes[args.class_index]
        tw = twisted_alexander(pres, rep)
    report = free_period_report(classical, tw)
    digest_parts = ["free-period", _pd_tuples(diagram), args.rep or ""]
    return {
        "criterion": "free-period-survey",
        "inputs_digest": digest_key(*digest_parts),
        "status": "no free periods" if report.overall else "inconclusive",
        "certificate": report.to_json(),
        "command": "obstruct",
        "mode": "free-period",
        "knot": args.knot,
    }


# -- batch -----------------------------------------------------------------------


def _batch_records(path):
    """(key, record-or-error) pairs from a JSON array or JSON-lines file."""
    with open(path) as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = None
    out = []
    if isinstance(data, list):
        for i, rec in enumerate(data):
            key = rec.get("name", "record-%d" % i) if isinstance(rec, dict) else "record-%d" % i
            out.append((key, rec))
        return out
    for i, line in enumerate(text.splitlines()):
        line = line.strip()
        if not line:
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as exc:
            out.append(("line-%d" % (i + 1), exc))
            continue
        key = rec.get("name", "line-%d" % (i + 1)) if isinstance(rec, dict) else "line-%d" % (i + 1)
        out.append((key, rec))
    return out


def _default_job(key, record):
    """The per-knot batch payload: classical polynomial, branched-cover
    homology, and the period-3 mod-3 screen."""
    if isinstance(record, Exception):
        raise ValueError("unreadable corpus record: %s" % record)
    if not isinstance(record, dict) or "pd" not in record:
        raise ValueError("corpus record needs a 'pd' field")
    diagram = parse_pd(json.dumps(record["pd"])).to_diagram()
    delta = normalize_up_to_unit(classical_alexander(diagram))
    h1 = h1_double_branched_cover(diagram)
    screen = murasugi_modp(delta, 3, 3)
    return {
        "knot": key,
        "status": "ok",
        "alexander": delta.to_string(),
        "h1_invariant_factors": h1,
        "period3_screen": screen.to_json(),
    }


def _run_batch_job(item):
    key, record_json, cache_dir = item
    cache = ResultCache(cache_dir) if cache_dir else NullCache()
    digest = digest_key("batch-default", record_json)
    hit = cache.get(digest)
    if hit is not None:
        return key, hit, True, False
    try:
        record = json.loads(record_json) if record_json != "null" else None
        result = _default_job(key, record if record is not None else ValueError("empty"))
        failed = False
    except Exception as exc:
        result = {"knot": key, "status": "error", "error": str(exc)}
        failed = True
    text = json.dumps(result)
    if not failed:
        cache.put(digest, text)
    return key, text, False, failed


def cmd_batch(args):
    try:
        records = _batch_records(args.corpus_file)
    except OSError as exc:
        raise UsageError("cannot read corpus: %s" % exc)
    items = []
    for key, rec in records:
        if isinstance(rec, Exception):
            items.append((key, "null", args.cache_dir))
        else:
            items.append((key, json.dumps(rec, sort_keys=True), args.cache_dir))
    jobs = args.jobs or os.cpu_count() or 1
    if jobs > 1 and len(items) > 1:
        with Pool(jobs) as pool:
            results = pool.map(_run_batch_job, items)
    else:
        results = [_run_batch_job(it) for it in items]
    results.sort(key=lambda r: r[0])
    lines = [text for _, text, _, _ in results]
    hits = sum(1 for _, _, h, _ in results if h)
    failures = sum(1 for _, _, _, f in results if f)
    body = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)
    print(
        "batch: %d jobs, %d cache hits, %d failures" % (len(results), hits, failures),
        file=sys.stderr,
    )
    return 3 if failures else 0


# -- rendering and driver -----------------------------------------------------


def render_text(doc, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(doc, dict):
        for k, v in doc.items():
            if isinstance(v, (dict, list)) and v:
                lines.append("%s%s:" % (pad, k))
                lines.append(render_text(v, indent + 1))
            else:
                lines.append("%s%s: %s" % (pad, k, _scalar_text(v)))
        return "\n".join(lines)
    if isinstance(doc, list):
        for v in doc:
            if isinstance(v, (dict, list)):
                lines.append(render_text(v, indent))
                lines.append("")
            else:
                lines.append("%s- %s" % (pad, _scalar_text(v)))
        while lines and lines[-1] == "":
            lines.pop()
        return "\n".join(lines)
    return pad + _scalar_text(doc)


def _scalar_text(v):
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    ap = _Parser(prog="knotperiod", description=__doc__)
    ap.add_argument("--corpus", help="alternate corpus file for name lookups")
    ap.add_argument("--format", choices=("json", "text"), default="json")
    sub = ap.add_subparsers(dest="subcommand", required=True)

    def knot_arg(p):
        p.add_argument("knot", help="corpus name, PD code, DT code, or braid word")

    p = sub.add_parser("poly", help="twisted polynomial with its Wada pieces")
    knot_arg(p)
    p.add_argument("--rep", default="trivial")
    p.add_argument("--ring", default="Z")
    p.set_defaults(fn=cmd_poly)

    p = sub.add_parser("reps", help="enumerate representation classes")
    knot_arg(p)
    p.add_argument("--rep", required=True)
    p.set_defaults(fn=cmd_reps)

    p = sub.add_parser("h1-dbc", help="homology of the double branched cover")
    knot_arg(p)
    p.set_defaults(fn=cmd_h1)

    p = sub.add_parser("obstruct", help="periodicity obstructions")
    osub = p.add_subparsers(dest="mode", required=True)

    po = osub.add_parser("period", help="period-q obstruction chain")
    knot_arg(po)
    po.add_argument("--q", type=int, required=True)
    po.add_argument("--rep")
    po.add_argument("--criterion", choices=("pipeline", "orbit"), default="pipeline")
    po.add_argument("--lambda-max", type=int, dest="lambda_max")
    po.add_argument("--class-index", type=int, default=0)
    po.set_defaults(fn=cmd_obstruct_period)

    pf = osub.add_parser("free-period", help="free-period survey")
    knot_arg(pf)
    pf.add_argument("--rep")
    pf.add_argument("--class-index", type=int, default=0)
    pf.set_defaults(fn=cmd_obstruct_free)

    p = sub.add_parser("batch", help="run default jobs over a corpus file")
    p.add_argument("corpus_file")
    p.add_argument("--jobs", type=int)
    p.add_argument("--cache-dir")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_batch)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    try:
        result = args.fn(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except EmptyEnumeration as exc:
        payload = exc.args[0]
        if isinstance(payload, dict):
            _emit(payload, args.format)
        else:
            print("error: %s" % payload, file=sys.stderr)
        return 2
    except (KeyError, ValueError) as exc:
        msg = exc.args[0] if exc.args else exc
        print("error: %s" % msg, file=sys.stderr)
        return 1
    if isinstance(result, int):
        return result
    _emit(result, args.format)
    return 0


def _emit(doc, fmt):
    if fmt == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(render_text(doc))


if __name__ == "__main__":
    sys.exit(main())
