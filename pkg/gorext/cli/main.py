#!/usr/bin/env python3
"""
gorext command line.

Exit codes: 0 success, 1 usage, parse or configuration error, 2 the window
or weight bound is insufficient, 3 an exact identity failed.
"""

from __future__ import annotations

import sys
from typing import Any, Dict, Optional, Tuple

import click

from .. import __version__
from ..algebra import Flavor
from ..errors import (
    ChainMapError,
    GorextError,
    InvariantViolation,
    NotAComplexError,
    ResolutionError,
    WindowError,
)
from ..linalg import FieldSpec
from ..modelparse import OUTPUT_FORMATS, emit_report, print_model, report_data
from ..models import build_builtin, list_builtins
from ..settings import EngineFactory, RunConfig
from ..utils.logging_config import get_logger, log_error_with_context
from .cache import ResultCache

logger = get_logger("gorext.cli.main")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_WINDOW = 2
EXIT_INTERNAL = 3


def exit_code_for(error: BaseException) -> int:
    if isinstance(error, (WindowError, ResolutionError)):
        return EXIT_WINDOW
    if isinstance(error, (InvariantViolation, NotAComplexError, ChainMapError)):
        return EXIT_INTERNAL
    return EXIT_USAGE


class ExitCodeGroup(click.Group):
    """click group that maps gorext errors onto the documented exit codes."""

    def main(self, *args: Any, **kwargs: Any) -> Any:
        kwargs.pop("standalone_mode", None)
        try:
            rv = super().main(*args, standalone_mode=False, **kwargs)
        except click.ClickException as e:
            e.show()
            sys.exit(EXIT_USAGE)
        except click.exceptions.Abort:
            click.echo("❌ Aborted", err=True)
            sys.exit(EXIT_USAGE)
        except (GorextError, ValueError, OSError) as e:
            code = exit_code_for(e)
            log_error_with_context(logger, e, "gorext command", exit_code=code)
            marker = "⚠️ " if code == EXIT_WINDOW else "❌"
            click.echo(f"{marker} {type(e).__name__}: {e}", err=True)
            sys.exit(code)
        sys.exit(rv if isinstance(rv, int) else EXIT_OK)


class WindowType(click.ParamType):
    """``lo..hi`` with integer bounds, e.g. ``-4..6``."""

    name = "window"

    def convert(self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]) -> Tuple[int, int]:
        if isinstance(value, tuple):
            return value
        lo, sep, hi = str(value).partition("..")
        try:
            if not sep:
                raise ValueError
            return int(lo), int(hi)
        except ValueError:
            self.fail(f"expected lo..hi, got {value!r}", param, ctx)


WINDOW = WindowType()


def _factory(ctx: click.Context) -> EngineFactory:
    factory = ctx.find_object(EngineFactory)
    if factory is None:
        raise click.UsageError("settings were not loaded")
    return factory


def _emit(text: str) -> None:
    click.echo(text if text.endswith("\n") else text + "\n", nl=False)


def _source_options(func: Any) -> Any:
    func = click.option("--field", help="Field override: Q, F3, F5, ...")(func)
    func = click.option(
        "--builtin", "builtin",
        help="Built-in model: a family spec such as two_cell:2,3 or a catalog name",
    )(func)
    func = click.option(
        "--model", "model_path", type=click.Path(exists=True, dir_okay=False),
        help="Model file in the model language",
    )(func)
    func = click.option(
        "--output", "-o", "output_format", type=click.Choice(OUTPUT_FORMATS), help="Output format"
    )(func)
    return func


def _compute_options(func: Any) -> Any:
    func = click.option("--no-cache", is_flag=True, help="Bypass the result cache")(func)
    func = click.option("--cache-dir", help="Result cache directory")(func)
    func = click.option("--margin", "weight_margin", type=int, help="Sullivan weight margin (>= 1)")(func)
    func = click.option("--window", type=WINDOW, help="Degree window lo..hi")(func)
    return func


def _run(factory: EngineFactory, config: RunConfig) -> None:
    pres = factory.load_presentation(config)
    if config.command == "check":
        _emit(emit_report(factory.run(config, pres), config.output_format))
        return
    window = factory.resolve_window(config, pres)
    material = factory.cache_material(config, pres, window)
    cache = ResultCache(config.cache_dir or factory.cache_directory) if config.use_cache else None
    data: Optional[Dict[str, Any]] = cache.get(material) if cache else None
    if data is None:
        data = report_data(factory.run(config, pres))
        if cache:
            cache.put(material, data)
    _emit(emit_report(data, config.output_format))


@click.group(cls=ExitCodeGroup)
@click.version_option(version=__version__)
@click.option("--config", "config_path", envvar="GOREXT_CONFIG", help="Alternative main settings file")
@click.pass_context
def cli(ctx: click.Context, config_path: Optional[str]) -> None:
    """gorext - Eilenberg-Moore Ext, Gorenstein tests and topological complexity bounds"""
    ctx.obj = EngineFactory(config_path)


@cli.command()
@_source_options
@click.pass_context
def check(ctx: click.Context, **options: Any) -> None:
    """Validate a model: d^2 = 0, minimality and the linear part"""
    factory = _factory(ctx)
    _run(factory, factory.run_config("check", **options))


@cli.command()
@_source_options
@_compute_options
@click.pass_context
def ext(ctx: click.Context, no_cache: bool, **options: Any) -> None:
    """Ext dimensions, Gorenstein verdict, formal dimension and products"""
    factory = _factory(ctx)
    _run(factory, factory.run_config("ext", use_cache=False if no_cache else None, **options))


@cli.command()
@_source_options
@_compute_options
@click.option("--n", "n", type=int, help="Number of tensor factors (>= 2)")
@click.option("--m-max", "m_max", type=int, help="Largest ideal power searched")
@click.pass_context
def invariants(ctx: click.Context, no_cache: bool, **options: Any) -> None:
    """zcl, HTC and their Ext versions with the Gorenstein criterion"""
    factory = _factory(ctx)
    _run(
        factory, factory.run_config("invariants", use_cache=False if no_cache else None, **options)
    )


@cli.group()
def cache() -> None:
    """Inspect or clear the result cache"""


@cache.command("show")
@click.option("--cache-dir", help="Result cache directory")
@click.pass_context
def cache_show(ctx: click.Context, cache_dir: Optional[str]) -> None:
    """List cached results"""
    store = ResultCache(cache_dir or _factory(ctx).cache_directory)
    rows = store.entries()
    click.echo(f"📁 {store.directory} ({len(rows)} entries)")
    for row in rows:
        click.echo(f"  {row['key'][:16]}  {row['command']:<10}  {row.get('window')}  {row['bytes']} bytes")


@cache.command("purge")
@click.option("--cache-dir", help="Result cache directory")
@click.pass_context
def cache_purge(ctx: click.Context, cache_dir: Optional[str]) -> None:
    """Delete every cached result"""
    store = ResultCache(cache_dir or _factory(ctx).cache_directory)
    removed = store.purge()
    click.echo(f"🗑️  Removed {removed} cache entries from {store.directory}")


@cli.group()
def models() -> None:
    """Built-in model catalog"""


@models.command("list")
@click.pass_context
def models_list(ctx: click.Context) -> None:
    """Show the built-in families and catalog entries"""
    click.echo("📚 Families:")
    for recipe in list_builtins():
        click.echo(f"  {recipe.usage:<34} {recipe.description}")
    click.echo("📋 Catalog:")
    for entry in _factory(ctx).builtin_entries():
        field = f" --field {entry['field']}" if entry.get("field") else ""
        window = entry.get("window")
        suggested = f" --window {window[0]}..{window[1]}" if window else ""
        click.echo(f"  {entry['name']:<18} --builtin {entry['spec']}{field}{suggested}")
        click.echo(f"  {'':<18} {entry['description']}")


@models.command("emit")
@click.argument("name")
@click.argument("params", required=False)
@click.option("--field", help="Field: Q, F3, F5, ...")
def models_emit(name: str, params: Optional[str], field: Optional[str]) -> None:
    """Print a built-in model in the model language, e.g. `models emit two_cell 2,3`"""
    spec = f"{name}:{params}" if params else name
    pres = build_builtin(spec, FieldSpec.parse(field) if field else None)
    if pres.flavor is Flavor.ADAMS_HILTON and not any(pres.d.images):
        click.echo("# zero differential")
    _emit(print_model(pres))


def main() -> None:
    cli(prog_name="gorext")


if __name__ == "__main__":
    main()
