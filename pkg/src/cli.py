"""
Command-line interface for file-based encoding and decoding.

Exit codes: 0 on success, 1 on input or format errors, 2 on codec errors.
"""

import logging
import sys
from pathlib import Path

import click

from src.errors import CodecError, InputError, MinorConditionError, RemediationError
from src.pipelines.message_codec import decode_message, encode_message, inspect_message
from src.tasks.loader import MessageLoader

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CODEC = 2

_path = click.Path(dir_okay=False, path_type=Path)


@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Log debugging details to standard error.")
@click.pass_context
def cli(ctx, verbose):
    """Encode and decode messages with Padovan Q-matrix blocks."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    ctx.obj = MessageLoader()


@cli.command()
@click.option("--input", "input_path", required=True, type=_path, help="Plaintext message file.")
@click.option("--output", "output_path", required=True, type=_path, help="Coded file to write.")
@click.pass_obj
def encode(loader, input_path, output_path):
    """Encode a plaintext file into a coded file."""
    text = loader.load_plaintext(input_path)
    coded = encode_message(text)
    loader.save_coded(output_path, coded)
    log.info("Wrote %d coded row(s) to %s", len(coded.rows), output_path)


@cli.command()
@click.option("--input", "input_path", required=True, type=_path, help="Coded file.")
@click.option("--output", "output_path", required=True, type=_path, help="Plaintext file to write.")
@click.pass_obj
def decode(loader, input_path, output_path):
    """Decode a coded file into plaintext."""
    coded = loader.load_coded(input_path)
    loader.save_plaintext(output_path, decode_message(coded))


@cli.command("inspect")
@click.option("--input", "input_path", required=True, type=_path, help="Coded file.")
@click.option("--equations", is_flag=True, help="Also print each row's E table and decode equation.")
@click.pass_obj
def inspect_command(loader, input_path, equations):
    """Print m, n and the determinant and minor status of every row."""
    coded = loader.load_coded(input_path)
    report = inspect_message(coded, equations=equations)
    for line in report.lines(equations=equations):
        click.echo(line)


def main(argv=None) -> int:
    """
    Run the CLI and map failures to exit codes.

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:]

    Returns:
        Process exit code
    """
    try:
        result = cli.main(args=argv, prog_name="padovan", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return EXIT_INPUT
    except click.Abort:
        click.echo("Aborted.", err=True)
        return EXIT_INPUT
    except InputError as e:
        click.echo(f"error: {e}", err=True)
        return EXIT_INPUT
    except (MinorConditionError, RemediationError) as e:
        click.echo(f"error: message cannot be encoded: {e}", err=True)
        return EXIT_CODEC
    except CodecError as e:
        click.echo(f"error: corrupted or undecodable message: {e}", err=True)
        return EXIT_CODEC
    return result if isinstance(result, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
