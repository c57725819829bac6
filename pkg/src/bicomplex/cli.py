"""Command-line front end.

Exit codes: 0 on success or a true predicate, 1 when a mathematical property
fails (not positive, not a product, singular, not CP, ...), 2 on malformed
input or usage errors.
"""
from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from . import choi, dsp, jsonio, positivity, tensor
from .errors import InputError, MathematicalFailure, NotProduct
from .matrix import mat_inverse, trace

log = logging.getLogger("bicomplex")

EXIT_OK, EXIT_FALSE, EXIT_INPUT = 0, 1, 2


@dataclass
class CommandRequest:
    command: str
    inputs: list[str] = field(default_factory=list)
    output: str | None = None
    tol: float = 1e-10
    seed: int | None = None
    options: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.tol > 0:
            raise InputError(f"tol must be positive, got {self.tol}")


@dataclass
class Outcome:
    payload: object
    ok: bool = True


def _complex_list(values) -> list[list[float]]:
    return [[float(v.real), float(v.imag)] for v in np.asarray(values)]


def _cmd_split(req):
    a = jsonio.load_matrix(req.inputs[0])
    return Outcome(jsonio.matrix_to_json(a, "idempotent"))


def _cmd_join(req):
    a = jsonio.load_matrix(req.inputs[0])
    return Outcome(jsonio.matrix_to_json(a, "cartesian"))


def _cmd_tensor(req):
    a, b = (jsonio.load_matrix(p) for p in req.inputs)
    route = req.options.get("route", "both")
    if route == "cartesian":
        return Outcome(jsonio.matrix_to_json(tensor.tensor_cartesian(a, b)))
    result = tensor.tensor_idempotent(a, b)
    if route == "both":
        diff = result.max_component_diff(tensor.tensor_cartesian(a, b))
        if diff > 1e-12 * (1 + a.frobenius() * b.frobenius()):
            log.error("tensor routes disagree by %.3e", diff)
            return Outcome({"error": "RouteMismatch", "max_diff": diff}, ok=False)
    return Outcome(jsonio.matrix_to_json(result))


def _cmd_positivity(req):
    a = jsonio.load_matrix(req.inputs[0])
    method = req.options.get("method", "all")
    methods = positivity.METHODS if method == "all" else (method,)
    verdicts = {m: positivity.is_hyperbolic_positive(a, req.tol, m) for m in methods}
    agree = len(set(verdicts.values())) == 1
    verdict = all(verdicts.values())
    return Outcome({"hyperbolic_positive": verdict, "methods": verdicts, "methods_agree": agree},
                   ok=verdict)


def _cmd_state(req):
    a = jsonio.load_matrix(req.inputs[0])
    verdict = positivity.is_state(a, req.tol)
    return Outcome({"state": verdict,
                    "componentwise_state": positivity.is_state_componentwise(a, req.tol),
                    "trace": jsonio.scalar_to_json(trace(a))}, ok=verdict)


def _cmd_cholesky(req):
    a = jsonio.load_matrix(req.inputs[0])
    return Outcome(jsonio.matrix_to_json(positivity.cholesky(a, req.tol,
                                                             lower=req.options.get("lower", False))))


def _cmd_rank1(req):
    a = jsonio.load_matrix(req.inputs[0])
    vecs = positivity.rank_one_decomposition(a, req.tol)
    return Outcome({"vectors": [jsonio.vector_to_json(v) for v in vecs]})


def _cmd_eig(req):
    a = jsonio.load_matrix(req.inputs[0])
    spectra = positivity.bc_eigenvalues(a, req.tol)
    return Outcome({"spectrum1": _complex_list(spectra.spectrum1),
                    "spectrum2": _complex_list(spectra.spectrum2)})


def _cmd_inverse(req):
    a = jsonio.load_matrix(req.inputs[0])
    return Outcome(jsonio.matrix_to_json(mat_inverse(a, req.options.get("method", "componentwise"))))


def _cmd_recover(req):
    m = jsonio.load_matrix(req.inputs[0])
    n, k = req.options["n"], req.options["m"]
    a, b = tensor.recover_factors(m, n, k, req.tol)
    return Outcome({"A": jsonio.matrix_to_json(a), "B": jsonio.matrix_to_json(b),
                    "gauge": tensor.RECOVERY_GAUGE,
                    "residual": tensor.factor_residual(m, a, b)})


def _cmd_choi(req):
    phi = jsonio.load_map(req.inputs[0])
    return Outcome(jsonio.matrix_to_json(choi.choi_matrix(phi)))


def _cmd_cp_test(req):
    phi = jsonio.load_map(req.inputs[0])
    verdict = choi.is_completely_positive(phi, req.tol)
    return Outcome({"completely_positive": verdict}, ok=verdict)


def _cmd_kraus(req):
    phi = jsonio.load_map(req.inputs[0])
    return Outcome(jsonio.kraus_to_json(choi.kraus_decomposition(phi, req.tol)))


def _cmd_tp_test(req):
    phi = jsonio.load_map(req.inputs[0])
    verdict = choi.is_trace_preserving(phi, req.tol)
    return Outcome({"trace_preserving": verdict}, ok=verdict)


def _cmd_apply_channel(req):
    phi = jsonio.load_map(req.inputs[0])
    a = jsonio.load_matrix(req.inputs[1])
    return Outcome(jsonio.matrix_to_json(choi.apply_map(phi, a)))


def _cmd_tensor_maps(req):
    phi, psi = (jsonio.load_map(p) for p in req.inputs)
    return Outcome(jsonio.map_to_json(choi.tensor_maps(phi, psi)))


def _cmd_dsp_apply(req):
    a_s = jsonio.load_matrix(req.inputs[0])
    b_r = jsonio.load_matrix(req.inputs[1])
    x = jsonio.vector_from_json(jsonio.read_json(req.inputs[2]))
    fast, slow = dsp.OpCounter(), dsp.OpCounter()
    y = dsp.apply_factored(a_s, b_r, x, fast)
    y_ref = dsp.apply_direct(a_s, b_r, x, slow)
    counts = {f"component_{c + 1}": {"direct_mults": slow.complex_mults[c],
                                     "factored_mults": fast.complex_mults[c]} for c in (0, 1)}
    return Outcome({"Y": jsonio.vector_to_json(y), "counts": counts,
                    "max_abs_diff_vs_direct": y.max_component_diff(y_ref)})


def _cmd_gram(req):
    n = req.options["n"]
    a = positivity.random_gram(n, req.options.get("rank") or n, req.seed)
    return Outcome(jsonio.matrix_to_json(a))


# name -> (handler, number of input files, help)
COMMANDS: dict[str, tuple[Callable[[CommandRequest], Outcome], int, str]] = {
    "split": (_cmd_split, 1, "rewrite a matrix in idempotent components"),
    "join": (_cmd_join, 1, "rewrite a matrix in cartesian components"),
    "tensor": (_cmd_tensor, 2, "bicomplex tensor product of two matrices"),
    "positivity": (_cmd_positivity, 1, "test hyperbolic positivity"),
    "state": (_cmd_state, 1, "test whether a matrix is a bicomplex state"),
    "cholesky": (_cmd_cholesky, 1, "triangular factor T with A = T^{*t} T"),
    "rank1": (_cmd_rank1, 1, "orthogonal rank-one decomposition"),
    "eig": (_cmd_eig, 1, "spectra of the idempotent components"),
    "inverse": (_cmd_inverse, 1, "matrix inverse"),
    "recover": (_cmd_recover, 1, "recover tensor factors of an nm x nm matrix"),
    "choi": (_cmd_choi, 1, "Choi matrix of a map"),
    "cp-test": (_cmd_cp_test, 1, "test complete positivity of a map"),
    "kraus": (_cmd_kraus, 1, "Kraus decomposition of a CP map"),
    "tp-test": (_cmd_tp_test, 1, "test trace preservation of a map"),
    "apply-channel": (_cmd_apply_channel, 2, "apply a map to a matrix"),
    "tensor-maps": (_cmd_tensor_maps, 2, "tensor product of two maps"),
    "dsp-apply": (_cmd_dsp_apply, 3, "factored product (A_s (x) B_r) X with op counts"),
    "gram": (_cmd_gram, 0, "random hyperbolic-positive Gram matrix"),
}

_INPUT_NAMES = {
    "tensor": ["A", "B"],
    "apply-channel": ["MAP", "MATRIX"],
    "tensor-maps": ["MAP1", "MAP2"],
    "dsp-apply": ["A_S", "B_R", "X"],
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-10, help="numerical tolerance (default 1e-10)")
    common.add_argument("--seed", type=int, default=None, help="seed for randomized commands")
    common.add_argument("--output", "-o", default=None, help="write JSON here instead of stdout")

    parser = argparse.ArgumentParser(prog="bicomplex", description="Bicomplex matrix toolkit")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, n_inputs, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text, parents=[common])
        names = _INPUT_NAMES.get(name, ["FILE"] if n_inputs == 1 else [])
        for arg in names:
            p.add_argument(arg.lower(), metavar=arg)
        if name == "tensor":
            p.add_argument("--route", choices=("both", "idempotent", "cartesian"), default="both")
        elif name == "positivity":
            p.add_argument("--method", choices=("all",) + positivity.METHODS, default="all")
        elif name == "inverse":
            p.add_argument("--method", choices=("componentwise", "cartesian"), default="componentwise")
        elif name == "cholesky":
            p.add_argument("--lower", action="store_true")
        elif name == "recover":
            p.add_argument("--n", type=int, required=True, help="size of the first factor")
            p.add_argument("--m", type=int, required=True, help="size of the second factor")
        elif name == "gram":
            p.add_argument("--n", type=int, required=True)
            p.add_argument("--rank", type=int, default=None)
    return parser


def _request_from_args(args: argparse.Namespace) -> CommandRequest:
    _, n_inputs, _ = COMMANDS[args.command]
    names = _INPUT_NAMES.get(args.command, ["FILE"] if n_inputs == 1 else [])
    inputs = [getattr(args, n.lower()) for n in names]
    skip = {"command", "tol", "seed", "output", "verbose", *(n.lower() for n in names)}
    options = {k: v for k, v in vars(args).items() if k not in skip}
    return CommandRequest(args.command, inputs, args.output, args.tol, args.seed, options)


def _emit(payload, path: str | None) -> None:
    text = jsonio.write_json(payload, path)
    if path is None:
        print(text)


def run(request: CommandRequest) -> int:
    handler, _, _ = COMMANDS[request.command]
    try:
        outcome = handler(request)
    except MathematicalFailure as exc:
        print(f"bicomplex {request.command}: {exc}", file=sys.stderr)
        payload = {"error": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, NotProduct):
            payload["residual"] = exc.residual
        _emit(payload, request.output)
        return EXIT_FALSE
    except (InputError, OSError) as exc:
        print(f"bicomplex {request.command}: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit(outcome.payload, request.output)
    return EXIT_OK if outcome.ok else EXIT_FALSE


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        request = _request_from_args(args)
    except InputError as exc:
        print(f"bicomplex: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return run(request)


if __name__ == "__main__":
    sys.exit(main())
