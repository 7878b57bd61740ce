import logging

from dtilde.catalog import VariableCatalog
from oracle.enumerate import ExplorationFrontier


class VerificationReport:
  """
    One row {entry, found, witness_depth} per catalog value. passed iff every value was found.
  """

  def __init__(self, rows: list):
    self.rows = rows

  @property
  def passed(self) -> bool:
    return all(row["found"] for row in self.rows)

  @property
  def missing(self) -> list:
    return [row["entry"] for row in self.rows if not row["found"]]

  def to_dict(self) -> dict:
    return {
      "passed": self.passed,
      "rows": [{"entry": str(row["entry"]), "found": row["found"], "witness_depth": row["witness_depth"]} for row in self.rows],
    }


def verify_catalog(catalog, oracle_set) -> VerificationReport:
  """
    Looks up every catalog value in the oracle. oracle_set is an ExplorationFrontier (witness
    depths are reported), a dict value -> depth, or a plain set of values.
  """

  if isinstance(oracle_set, ExplorationFrontier):
    oracle_set = oracle_set.witness
  values = catalog.values() if isinstance(catalog, VariableCatalog) else list(catalog)
  rows = []
  for value in values:
    found = value in oracle_set
    depth = oracle_set[value] if found and isinstance(oracle_set, dict) else None
    rows.append({"entry": value, "found": found, "witness_depth": depth})
  report = VerificationReport(rows)
  logging.info(f"Verified {len(rows)} catalog values, {len(report.missing)} missing from the oracle")
  return report
