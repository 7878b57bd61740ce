import logging

import click

from util.output.formatters.csv_formatter import CsvFormatter
from util.output.formatters.json_formatter import JsonFormatter
from util.output.formatters.text_formatter import TextFormatter

FORMATS = ["text", "json", "csv"]

_format_builders = {
  "text": lambda: TextFormatter(),
  "json": lambda: JsonFormatter(),
  "csv": lambda: CsvFormatter(),
}


def get_formatter(fmt: str):
  if fmt not in _format_builders:
    raise click.BadParameter(f"unknown format '{fmt}'", param_hint="--format")
  return _format_builders[fmt]()


def write_output(text: str, out: str=None):
  """
    Writes text to the file out, or to stdout when out is None.
  """

  if out is None:
    click.echo(text)
    return
  with open(out, "w", encoding="utf-8") as out_file:
    out_file.write(text + "\n")
  logging.info(f"Wrote {len(text)} characters to {out}")
