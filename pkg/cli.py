import sys

import click

from util.errors import FriezeLabError

# Commands are registered by the different modules

from tiling.tiling import tile

from frieze.frieze import frieze

from dtilde.variables import variables

from oracle.verify import verify


class FriezeLabGroup(click.Group):
  """
    Exit codes: 0 on success, 1 for usage errors and bad input, 2 when a mathematical invariant breaks.
  """

  def main(self, *args, **kwargs):
    kwargs["standalone_mode"] = False
    try:
      return super().main(*args, **kwargs)
    except click.UsageError as e:
      e.show()
      sys.exit(1)
    except click.ClickException as e:
      e.show()
      sys.exit(e.exit_code)
    except click.Abort:
      click.echo("Aborted!", err=True)
      sys.exit(1)
    except FriezeLabError as e:
      click.echo(f"Error: {e}", err=True)
      sys.exit(e.exit_code)


@click.group(cls=FriezeLabGroup)
def entry_point():
  pass

entry_point.add_command(tile)
entry_point.add_command(frieze)
entry_point.add_command(variables)
entry_point.add_command(verify)

if __name__ == "__main__":
  entry_point()
