import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from boundary.boundary_word import parse_boundary
from dtilde.transjective import DtildeTiling
from exactalg.rational import RationalFunction
from quiver.quiver import build_d_tilde
from quiver.seed import Seed
from tiling.session import TilingSession


def u(i: int) -> RationalFunction:
  return RationalFunction.variable(i, 7)


@pytest.fixture
def d4():
  return build_d_tilde(4, "all-in")


@pytest.fixture
def d4_seed(d4):
  return Seed.initial(d4)


@pytest.fixture
def d4_tiling(d4):
  return DtildeTiling(d4)


@pytest.fixture
def d5():
  return build_d_tilde(5, "all-in")


@pytest.fixture
def d5_tiling(d5):
  return DtildeTiling(d5)


@pytest.fixture
def periodic_session():
  """
    The tiling of ^inf(x x x y)^inf with every label 1.
  """

  return TilingSession.from_boundary(parse_boundary("^inf( x x x y )^inf"))


@pytest.fixture
def alphas():
  """
    Mouth variables of the three D~4 tubes for the all-in orientation.
  """

  top = u(1) * u(2) * u(4) * u(5) + (1 + u(3)) ** 2
  return {
    "alpha1": top / (u(3) * u(4) * u(5)),
    "alpha1'": top / (u(1) * u(2) * u(3)),
    "alpha2": top / (u(1) * u(3) * u(5)),
    "alpha2'": top / (u(2) * u(3) * u(4)),
    "alpha3": top / (u(1) * u(3) * u(4)),
    "alpha3'": top / (u(2) * u(3) * u(5)),
  }
