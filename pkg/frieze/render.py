from frieze.session import FriezeSession, frieze_value, modelled_lines, modelled_value


def render_frieze(s: FriezeSession, k_min: int, k_max: int, modelled: bool=False) -> str:
  """
    Small ASCII picture of the frieze: one row per vertex (or modelled line), one column per k.
    Only meant for reading by eye; the layout may change.
  """

  if modelled:
    labels = modelled_lines(s.n)
    cell = lambda k, label: modelled_value(s, k, label)
  else:
    labels = list(s.quiver.vertices)
    cell = lambda k, label: frieze_value(s, k, label)
  ks = list(range(k_min, k_max + 1))
  table = [["k"] + [str(k) for k in ks]]
  for label in reversed(labels):
    table.append([str(label)] + [str(cell(k, label)) for k in ks])
  widths = [max(len(row[col]) for row in table) for col in range(len(table[0]))]
  lines = []
  for row in table:
    lines.append(" | ".join(text.rjust(width) for text, width in zip(row, widths)).rstrip())
  lines.insert(1, "-+-".join("-" * width for width in widths))
  return "\n".join(lines)
