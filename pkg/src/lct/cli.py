"""Command line entry point (``lct``).

Exit codes: 0 success, 1 usage error, 2 stage failure (stage named on stderr).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from lct import rewrite, syntax
from lct.errors import LctError, StageError
from lct.grammar import ALL_CATEGORIES, Category, UnsupportedLanguage, load_grammar, normalize_language
from lct.pipeline import Mode, ablate, bundled_corpus_path, category_label, corpus_stats, ingest_corpus, run
from lct.rewrite import ReplacementMapping
from lct.tokens import make_tokenizer
from lct.translate import ProviderConfig

EXIT_OK, EXIT_USAGE, EXIT_STAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _language(value: str) -> str:
    try:
        return normalize_language(value)
    except UnsupportedLanguage as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _categories(value: str) -> frozenset[Category]:
    try:
        return Category.parse_set(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_rules(p: argparse.ArgumentParser) -> None:
    p.add_argument("--rules", metavar="PATH", help="rule file or directory of <lang>.rules overriding the bundled ones")


def _add_tokenizer(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tokenizer", choices=["default", "bpe"], default="default")
    p.add_argument("--tokenizer-vocab", metavar="PATH", help="tiktoken-format ranks file for --tokenizer bpe")


def _add_provider(p: argparse.ArgumentParser) -> None:
    d = ProviderConfig()
    p.add_argument("--provider", choices=["mock", "http"], default="mock")
    p.add_argument("--mock", choices=["identity", "reorder"], default="identity", help="mock behaviour")
    p.add_argument("--endpoint", default=d.endpoint)
    p.add_argument("--model", default=d.model)
    p.add_argument("--temperature", type=float, default=d.temperature)
    p.add_argument("--max-tokens", type=int, default=d.max_tokens)
    p.add_argument("--max-attempts", type=int, default=d.max_attempts)
    p.add_argument("--backoff-base", type=float, default=d.backoff_base)
    p.add_argument("--timeout", type=float, default=d.timeout)
    p.add_argument("--api-key-env", default=d.api_key_env, help="environment variable holding the auth token")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lct", description="Compact identifiers for LLM code translation and restore them afterwards.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("extract", help="print eligible identifier captures as JSON")
    p.add_argument("file")
    p.add_argument("--lang", type=_language, required=True)
    _add_rules(p)

    p = sub.add_parser("replace", help="print compacted code and write the mapping sidecar")
    p.add_argument("file")
    p.add_argument("--lang", type=_language, required=True)
    p.add_argument("--categories", type=_categories, default=ALL_CATEGORIES)
    p.add_argument("--map", metavar="OUT", help="sidecar path (default: <file>.idmap.json)")
    _add_tokenizer(p)
    _add_rules(p)

    p = sub.add_parser("restore", help="put original identifiers back into translated code")
    p.add_argument("file")
    p.add_argument("--map", metavar="IDMAP", required=True)

    p = sub.add_parser("translate", help="compact, translate and restore one file")
    p.add_argument("file")
    p.add_argument("--from", dest="src", type=_language, required=True)
    p.add_argument("--to", dest="tgt", type=_language, required=True)
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.IDREP.value)
    p.add_argument("--categories", type=_categories, default=ALL_CATEGORIES)
    p.add_argument("--out-dir", metavar="DIR", help="where the sidecar and raw response go (default: next to <file>)")
    _add_provider(p)
    _add_tokenizer(p)
    _add_rules(p)

    p = sub.add_parser("stats", help="per-language token savings report as JSON")
    p.add_argument("path", nargs="?", help="directory, source file or JSON-lines file (default: bundled mini-corpus)")
    p.add_argument("--jsonl", action="store_true", help="read PATH as JSON-lines (source_code, lang, src_uid)")
    p.add_argument("--workers", type=int, default=1)
    _add_tokenizer(p)
    _add_rules(p)

    p = sub.add_parser("ablate", help="one IdRep run per category subset")
    p.add_argument("file")
    p.add_argument("--from", dest="src", type=_language, required=True)
    p.add_argument("--to", dest="tgt", type=_language, required=True)
    p.add_argument("--sets", default="F;D;P;E", help='semicolon separated subsets, "-" for the empty set')
    _add_provider(p)
    _add_tokenizer(p)
    _add_rules(p)
    return parser


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise StageError("read", exc) from exc


def _write(path: Path, text: str) -> None:
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise StageError("write", exc) from exc


def _tokenizer(args):
    try:
        return make_tokenizer(args.tokenizer, args.tokenizer_vocab)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    except (OSError, RuntimeError) as exc:
        raise StageError("tokenizer", exc) from exc


def _rules(args, language: str):
    try:
        return load_grammar(language, args.rules)
    except LctError as exc:
        raise StageError("rules", exc) from exc


def _provider_config(args) -> ProviderConfig:
    try:
        return ProviderConfig(
            endpoint=args.endpoint,
            model=args.model,
            temperature=args.temperature,
            max_tokens=args.max_tokens,
            api_key_env=args.api_key_env,
            max_attempts=args.max_attempts,
            backoff_base=args.backoff_base,
            timeout=args.timeout,
            provider=args.provider,
            mock=args.mock,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_extract(args) -> int:
    code = _read(args.file)
    rules = _rules(args, args.lang)
    try:
        captures = syntax.extract_identifiers(code, args.lang, rules)
    except LctError as exc:
        raise StageError("parse", exc) from exc
    json.dump([c.to_dict() for c in captures], sys.stdout, indent=2, ensure_ascii=False)
    sys.stdout.write("\n")
    return EXIT_OK


def cmd_replace(args) -> int:
    code = _read(args.file)
    tok = _tokenizer(args)
    rules = _rules(args, args.lang)
    try:
        compacted, mapping = rewrite.compact(code, args.lang, tok, args.categories, rules)
    except LctError as exc:
        raise StageError("replace", exc) from exc
    _write(Path(args.map or f"{args.file}.idmap.json"), mapping.to_json())
    sys.stdout.write(compacted)
    return EXIT_OK


def cmd_restore(args) -> int:
    translated = _read(args.file)
    try:
        mapping = ReplacementMapping.load(args.map)
    except (OSError, LctError) as exc:
        raise StageError("read", exc) from exc
    restored, unresolved = rewrite.restore(translated, mapping)
    sys.stdout.write(restored)
    for p in unresolved:
        print(f"unresolved placeholder: {p}", file=sys.stderr)
    return EXIT_OK


def cmd_translate(args) -> int:
    if args.src == args.tgt:
        raise UsageError("--from and --to must differ")
    code = _read(args.file)
    tok = _tokenizer(args)
    cfg = _provider_config(args)
    rules = _rules(args, args.src)
    result = run(code, args.src, args.tgt, args.mode, args.categories, tok, cfg, rules=rules)
    src = Path(args.file)
    out_dir = Path(args.out_dir) if args.out_dir else src.parent
    _write(out_dir / f"{src.name}.idmap.json", result.mapping.to_json())
    _write(out_dir / f"{src.name}.raw.txt", result.raw_response)
    sys.stdout.write(result.restored)
    for p in result.unresolved:
        print(f"unresolved placeholder: {p}", file=sys.stderr)
    return EXIT_OK


def cmd_stats(args) -> int:
    tok = _tokenizer(args)
    path = args.path or bundled_corpus_path()
    try:
        corpus = ingest_corpus(path, jsonl=True if args.jsonl else None)
        report = corpus_stats(corpus, tok, workers=args.workers, rules_path=args.rules)
    except LctError as exc:
        raise StageError("stats", exc) from exc
    sys.stdout.write(report.to_json())
    return EXIT_OK


def cmd_ablate(args) -> int:
    if args.src == args.tgt:
        raise UsageError("--from and --to must differ")
    try:
        sets = [Category.parse_set(s) for s in args.sets.split(";")]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    code = _read(args.file)
    tok = _tokenizer(args)
    cfg = _provider_config(args)
    rules = _rules(args, args.src)
    results = ablate(code, args.src, args.tgt, sets, tok, cfg, rules=rules)
    out = []
    for r in results:
        saved = rewrite.savings_report(r.mapping)
        out.append(
            {
                "categories": category_label(r.categories),
                "replaced": [e.original for e in r.mapping.replaced_entries()],
                "delta_l": saved.delta_l_unique,
                "tokens_saved": saved.per_sample_saved,
                "tokens_norep": r.tokens_norep,
                "tokens_idrep": r.tokens_idrep,
                "unresolved": r.unresolved,
                "restored": r.restored,
            }
        )
    json.dump(out, sys.stdout, indent=2, ensure_ascii=False)
    sys.stdout.write("\n")
    return EXIT_OK


COMMANDS = {
    "extract": cmd_extract,
    "replace": cmd_replace,
    "restore": cmd_restore,
    "translate": cmd_translate,
    "stats": cmd_stats,
    "ablate": cmd_ablate,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR, format="%(levelname)s %(message)s")
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"lct: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except StageError as exc:
        print(f"lct: {exc.stage} stage failed: {exc.cause}", file=sys.stderr)
        return EXIT_STAGE


if __name__ == "__main__":
    sys.exit(main())
