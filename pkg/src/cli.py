"""
Командная строка: вычисление действий, проверочные наборы, замеры, таблица соотношений.

    python src/cli.py eval --rep skein --kappa 2 --word "s1*y1" --elem "(a1^2*a2^-1,[2 1])"
    python src/cli.py check --suite relations --kappa 2 --seed 42
    python src/cli.py bench --kappa 3 --length 10
    python src/cli.py relations --kappa 3

Коды возврата: 0 - успех, 1 - ошибки проверки или арифметики, 2 - ошибка разбора или использования.
"""
import argparse
import json
import logging
import random
import sys
import time
from typing import Iterable, List, Optional, Tuple

from pydantic import ValidationError

from algebra_models.errors import AlgebraError, DomainError, IndexRangeError, ParseError, RankMismatchError
from algebra_models.laurent import LaurentPoly
from algebra_models.permutation import Permutation
from algebra_models.skein_element import SkeinElement
from algebra_models.words import GeneratorWord, relation_table
from core import settings
from dto.check_dto import SuiteSizes, SuiteSummary
from dto.eval_dto import BenchRecord, EvalResponse
from verification_models import samples
from verification_models.verify import SUITES, default_sizes, representation, run_suite

logger = logging.getLogger("cli")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

USAGE_ERRORS = (ParseError, IndexRangeError, RankMismatchError, DomainError)


def emit(line: str) -> None:
    print(line, flush=True)


def emit_record(record: str, payload: dict) -> None:
    emit(json.dumps({"record": record, **payload}, ensure_ascii=False))


# ===== eval =====


def read_eval_file(path: str) -> List[Tuple[str, str]]:
    """
    Пары (слово, элемент) из файла со строками "word: ..." и "elem: ...".
    Каждый elem вычисляется с последним встреченным word (по умолчанию - единица).
    """
    pairs: List[Tuple[str, str]] = []
    word = ""
    with open(path, encoding="utf-8") as f:
        for number, raw in enumerate(f, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition(":")
            key = key.strip().lower()
            if not sep or key not in ("word", "elem"):
                raise ParseError(f"{path}:{number}: expected 'word: ...' or 'elem: ...'")
            if key == "word":
                word = value.strip()
            else:
                pairs.append((word, value.strip()))
    return pairs


def cmd_eval(args: argparse.Namespace) -> int:
    rep = representation(args.rep, args.kappa)
    if args.file:
        pairs = read_eval_file(args.file)
    elif args.elem is not None:
        pairs = [(args.word, args.elem)]
    else:
        raise ParseError("either --elem or --file is required")
    for word_text, element_text in pairs:
        word = GeneratorWord.parse(word_text, args.kappa)
        element = rep.parse_element(element_text)
        result = rep.act(word, element)
        if args.d_eq_s:
            result = rep.substitute_d_eq_s(result)
        if args.format == "json-lines":
            response = EvalResponse(
                rep=args.rep,
                kappa=args.kappa,
                word=str(word),
                element=rep.format_element(element),
                result=rep.format_element(result),
                terms=len(result),
            )
            emit_record("eval", response.model_dump())
        else:
            emit(rep.format_element(result))
    return EXIT_OK


# ===== check =====


def sizes_from_args(args: argparse.Namespace) -> SuiteSizes:
    defaults = default_sizes(args.kappa).model_dump()
    overrides = {name: getattr(args, name) for name in SuiteSizes.model_fields if getattr(args, name) is not None}
    return SuiteSizes(**{**defaults, **overrides})


def format_sizes(sizes: SuiteSizes) -> str:
    return " ".join(f"{name}={value}" for name, value in sizes.model_dump().items())


def print_summary(summary: SuiteSummary, output_format: str) -> None:
    if output_format == "json-lines":
        emit_record("header", {"suite": summary.suite, "kappa": summary.kappa, "seed": summary.seed,
                               "sizes": summary.sizes.model_dump()})
        for report in summary.reports:
            emit_record("report", report.model_dump())
        emit_record("summary", {"cases": summary.cases, "failures": summary.failures, "ok": summary.ok})
        return
    emit(f"# suite={summary.suite} kappa={summary.kappa} seed={summary.seed}")
    emit(f"# sizes: {format_sizes(summary.sizes)}")
    for report in summary.reports:
        status = "OK" if report.ok else "FAIL"
        emit(f"{report.label:<28} kappa={report.kappa} cases={report.cases} failures={report.failures} {status}")
        example = report.counterexample
        if example is not None:
            emit(f"    word:  {example.word}")
            emit(f"    input: {example.input}")
            if example.error:
                emit(f"    error: {example.error}")
            else:
                emit(f"    lhs:   {example.lhs}")
                emit(f"    rhs:   {example.rhs}")
    emit(f"total: cases={summary.cases} failures={summary.failures}")


def cmd_check(args: argparse.Namespace) -> int:
    try:
        sizes = sizes_from_args(args)
    except ValidationError as e:
        raise DomainError(f"invalid suite sizes: {e}")
    summary = run_suite(args.suite, args.kappa, args.seed, sizes, args.workers)
    logger.info("suite %s finished in %.2fs", summary.suite, summary.elapsed)
    print_summary(summary, args.format)
    return EXIT_OK if summary.ok else EXIT_FAILURE


# ===== bench =====


def bench_inputs(rng: random.Random, kappa: int) -> Tuple[LaurentPoly, SkeinElement]:
    exps = samples.random_exponents(rng, kappa, 2)
    return LaurentPoly.monomial(exps), SkeinElement.basis(exps, Permutation.identity(kappa))


def cmd_bench(args: argparse.Namespace) -> int:
    rng = random.Random(args.seed)
    records: List[BenchRecord] = []
    for _ in range(args.words):
        word = samples.random_word(rng, args.kappa, args.length)
        inputs = bench_inputs(rng, args.kappa)
        for name, element in zip(("poly", "skein"), inputs):
            rep = representation(name, args.kappa)
            started = time.perf_counter()
            result = rep.act(word, element)
            records.append(
                BenchRecord(
                    rep=name,
                    kappa=args.kappa,
                    word=str(word),
                    word_length=len(word),
                    input_terms=len(element),
                    output_terms=len(result),
                    seconds=time.perf_counter() - started,
                )
            )
    print_bench(records, args)
    return EXIT_OK


def print_bench(records: Iterable[BenchRecord], args: argparse.Namespace) -> None:
    if args.format == "json-lines":
        emit_record("header", {"kappa": args.kappa, "seed": args.seed, "words": args.words, "length": args.length})
        for record in records:
            emit_record("bench", record.model_dump())
        return
    emit(f"# bench kappa={args.kappa} seed={args.seed} words={args.words} length={args.length}")
    for record in records:
        emit(
            f"{record.rep:<6} len={record.word_length:<3} terms {record.input_terms} -> {record.output_terms:<6}"
            f" {record.seconds:.4f}s  {record.word}"
        )


# ===== relations =====


def cmd_relations(args: argparse.Namespace) -> int:
    for relation in relation_table(args.kappa):
        if args.format == "json-lines":
            emit_record("relation", {"label": relation.label, "kappa": args.kappa,
                                     "lhs": str(relation.lhs), "rhs": str(relation.rhs)})
        else:
            emit(str(relation))
    return EXIT_OK


# ===== разбор аргументов =====


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="daha", description="DAHA polynomial and skein representations")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--kappa", type=positive_int, required=True, help="number of strands")
    common.add_argument("--format", choices=("text", "json-lines"), default="text")
    commands = parser.add_subparsers(dest="command", required=True)

    eval_parser = commands.add_parser("eval", parents=[common], help="act by a word on an element")
    eval_parser.add_argument("--rep", choices=("poly", "skein"), required=True)
    eval_parser.add_argument("--word", default="", help='e.g. "x1^-1 * y1 * x1"; empty is the identity')
    eval_parser.add_argument("--elem", help='e.g. "s*X1^2*X2^-1" or "(a1^2*a2^-1,[2 1])"')
    eval_parser.add_argument("--file", help="file with 'word: ...' and 'elem: ...' lines")
    eval_parser.add_argument("--d-eq-s", dest="d_eq_s", action="store_true", help="substitute d = s in the result")
    eval_parser.set_defaults(handler=cmd_eval)

    check_parser = commands.add_parser("check", parents=[common], help="run verification suites")
    check_parser.add_argument("--suite", choices=SUITES + ("all",), default="all")
    check_parser.add_argument("--seed", type=int, default=0)
    check_parser.add_argument("--workers", type=positive_int, default=None,
                              help=f"worker processes (default DAHA_WORKERS={settings.WORKERS})")
    for name in SuiteSizes.model_fields:
        check_parser.add_argument(f"--{name.replace('_', '-')}", dest=name, type=int, default=None)
    check_parser.set_defaults(handler=cmd_check)

    bench_parser = commands.add_parser("bench", parents=[common], help="time random-word actions")
    bench_parser.add_argument("--length", type=positive_int, default=10)
    bench_parser.add_argument("--words", type=positive_int, default=5)
    bench_parser.add_argument("--seed", type=int, default=0)
    bench_parser.set_defaults(handler=cmd_bench)

    relations_parser = commands.add_parser("relations", parents=[common], help="print the defining relations")
    relations_parser.set_defaults(handler=cmd_relations)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.INFO if args.verbose else settings.LOG_LEVEL
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.handler(args)
    except USAGE_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except AlgebraError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
