import os
import re
from dataclasses import dataclass, field

import click
from sympy import Rational

from exactalg.rational import RationalFunction, substitute

THREADS_VARIABLE = "FRIEZE_LAB_THREADS"

_NUMERIC_ITEM = re.compile(r"^(all|u\d+)=(-?\d+(?:/\d+)?)$")


@dataclass
class RunConfig:
  """
    Options of one command run, after parsing.
  """

  command: str
  quiver: str = None
  boundary: str = None
  window: tuple = None
  k_range: tuple = None
  tube_depth: int = 1
  depth: int = None
  numeric: dict = field(default_factory=dict)
  numeric_first: bool = False
  fmt: str = "text"
  out: str = None
  processes: int = None

  def __post_init__(self):
    if self.quiver and self.boundary:
      raise click.UsageError("give either --quiver or --boundary, not both")

  def apply_numeric(self, value):
    return apply_numeric(value, self.numeric)


def _int_list(text: str, count: int, name: str) -> tuple:
  parts = [p.strip() for p in text.split(",")]
  if len(parts) != count:
    raise click.BadParameter(f"expected {count} comma separated integers, got '{text}'", param_hint=name)
  try:
    return tuple(int(p) for p in parts)
  except ValueError:
    raise click.BadParameter(f"expected {count} comma separated integers, got '{text}'", param_hint=name)


def parse_window(text: str) -> tuple:
  """
    'c0,r0,c1,r1' with c0 <= c1 and r0 <= r1.
  """

  c0, r0, c1, r1 = _int_list(text, 4, "--window")
  if c1 < c0 or r1 < r0:
    raise click.BadParameter(f"window '{text}' is empty", param_hint="--window")
  return (c0, r0, c1, r1)


def parse_k_range(text: str) -> tuple:
  """
    'a,b' with a <= b. 'none' (or an empty string) is the empty range and gives None.
  """

  if text is None or text.strip().lower() in ("", "none"):
    return None
  a, b = _int_list(text, 2, "--k-range")
  if b < a:
    raise click.BadParameter(f"k-range '{text}' is empty", param_hint="--k-range")
  return (a, b)


def parse_numeric(text: str) -> dict:
  """
    'all=1' or 'u1=2,u3=1/2' (both may be combined) to {"all" or index: Rational}.
  """

  if not text:
    return {}
  assignment = {}
  for item in text.split(","):
    match = _NUMERIC_ITEM.match(item.strip())
    if not match:
      raise click.BadParameter(f"cannot read '{item}'; use all=1 or u1=2,u3=1/2", param_hint="--numeric")
    name, value = match.groups()
    assignment["all" if name == "all" else int(name[1:])] = Rational(value)
  return assignment


def apply_numeric(value: RationalFunction, numeric: dict):
  """
    Substitutes the numeric assignment into value; 'all' covers every variable not named explicitly.
  """

  if value is None or not numeric:
    return value
  assignment = {}
  if "all" in numeric:
    assignment = {i: numeric["all"] for i in value.variables}
  assignment.update({i: v for i, v in numeric.items() if i != "all"})
  return substitute(value, assignment)


def threads_from_env() -> int:
  """
    Worker process cap from FRIEZE_LAB_THREADS. Unset, empty or 1 means sequential (None).
  """

  raw = os.environ.get(THREADS_VARIABLE, "").strip()
  if not raw:
    return None
  try:
    threads = int(raw)
  except ValueError:
    raise click.UsageError(f"{THREADS_VARIABLE} must be a positive integer, got '{raw}'")
  if threads < 1:
    raise click.UsageError(f"{THREADS_VARIABLE} must be a positive integer, got '{raw}'")
  return threads if threads > 1 else None


def resolve_processes(processes: int) -> int:
  if processes is not None:
    return processes if processes > 1 else None
  return threads_from_env()


def default_depth(n: int) -> int:
  if n == 4:
    return 9
  if n == 5:
    return 7
  return max(5, 11 - n)
