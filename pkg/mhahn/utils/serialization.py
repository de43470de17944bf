import csv
import io
import json
from dataclasses import (
    dataclass,
    field,
)
from fractions import (
    Fraction,
)
from typing import (
    Any,
    Dict,
    List,
    Optional,
    Sequence,
)

from mhahn.constants import (
    approx_digits,
    csv_header,
    json_schema_version,
)
from mhahn.core import (
    RMatrix,
    approx,
    format_rational,
)


def _cell(value: Any) -> str:
    if isinstance(value, (Fraction, int)) and not isinstance(value, bool):
        return format_rational(value)
    return str(value)


@dataclass
class ExactTable:
    r"""A named table of exact values.

    Parameters
    ----------
    name : str
        Table name, the first CSV column.
    columns : list of str
        Column labels.
    rows : list of list
        Row values; rationals are written as ``p/q`` strings.
    approx_columns : list of str
        Columns that get a decimal ``approx`` rendering.
    approx_values : list of list, optional
        Decimal renderings to use instead of the cell values, e.g. signed
        square roots of squared entries.
    """

    name: str
    columns: List[str]
    rows: List[List[Any]] = field(default_factory=list)
    approx_columns: List[str] = field(default_factory=list)
    approx_values: Optional[List[List[Optional[str]]]] = None

    @classmethod
    def from_matrix(cls, name: str, mat: RMatrix, prefix: str = "") -> "ExactTable":
        columns = [f"{prefix}{jj}" for jj in range(mat.ncols)]
        return cls(name, columns, [list(row) for row in mat.to_list()], columns)

    def append(self, row: Sequence[Any]):
        assert len(row) == len(
            self.columns
        ), f"Error: row of length {len(row)} for {len(self.columns)} columns"
        self.rows.append(list(row))

    def approx_row(self, ii: int) -> List[Optional[str]]:
        if self.approx_values is not None:
            return list(self.approx_values[ii])
        return [
            approx(Fraction(vv), approx_digits)
            if cc in self.approx_columns
            and isinstance(vv, (Fraction, int))
            and not isinstance(vv, bool)
            else None
            for cc, vv in zip(self.columns, self.rows[ii])
        ]

    def to_dict(self, with_approx: bool = False) -> Dict[str, Any]:
        ret: Dict[str, Any] = {
            "name": self.name,
            "columns": list(self.columns),
            "rows": [[_cell(vv) for vv in row] for row in self.rows],
        }
        if with_approx:
            ret["approx"] = [self.approx_row(ii) for ii in range(len(self.rows))]
        return ret


def dumps_json(payload: Dict[str, Any]) -> str:
    r"""UTF-8 JSON with a leading ``"schema"`` field and a trailing newline."""
    data = {"schema": json_schema_version}
    data.update(payload)
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def dumps_csv(tables: Sequence[ExactTable], with_approx: bool = False) -> str:
    r"""Long-format CSV, one line per cell: ``table,row,column,value``.

    With ``with_approx`` an ``approx`` column holds the decimal rendering
    of the cells listed in :attr:`ExactTable.approx_columns`.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    header = list(csv_header) + (["approx"] if with_approx else [])
    writer.writerow(header)
    for table in tables:
        for ii, row in enumerate(table.rows):
            approx_row = table.approx_row(ii) if with_approx else []
            for jj, (column, value) in enumerate(zip(table.columns, row)):
                line = [table.name, ii, column, _cell(value)]
                if with_approx:
                    line.append("" if approx_row[jj] is None else approx_row[jj])
                writer.writerow(line)
    return buffer.getvalue()
