"""Format result tables for printing on the command line."""
from typing import Any, Sequence, TypedDict


class FormatParameters(TypedDict):
    """Typed Dictionary Type for table formatting parameters."""
    top_left_corner: str
    top_bar: str
    top_junction: str
    top_right_corner: str
    head_left_bar: str
    head_div_bar: str
    head_right_bar: str
    head_bottom_left_junction: str
    head_bottom_bar: str
    head_bottom_junction: str
    head_bottom_right_junction: str
    left_bar: str
    div_bar: str
    right_bar: str
    bottom_left_corner: str
    bottom_bar: str
    bottom_junction: str
    bottom_right_corner: str
    head_cell_pre: str
    head_cell_post: str
    cell_pre: str
    cell_post: str


class Formatter:
    """Renders rows of values below a header row as an aligned text table.

    All cells are right-aligned, so integers of different length line up.
    A rule is only drawn if its bar character is non-empty.

    :Example:

        >>> print(SimpleFormatter([(7, 5), (7887, 5577)], ["r", "s"]))
        +------+------+
        |    r |    s |
        +======+======+
        |    7 |    5 |
        | 7887 | 5577 |
        +------+------+
    """

    fmt: FormatParameters

    def __init__(self, fmt: FormatParameters):
        self.fmt = fmt

    def __call__(self, rows: Sequence[Sequence[Any]], headers: Sequence[str]) -> str:
        colrange = range(0, len(headers))
        rowrange = range(0, len(rows))
        data = self._prepare_data(rows, colrange, rowrange)
        heads = self._preformat_headers(headers, colrange)
        data = self._preformat_cells(data, colrange, rowrange)
        data, heads = self._align_columns(data, heads, colrange, rowrange)
        return self._build_string(data, heads, colrange, rowrange)

    def _prepare_data(
            self,
            rows: Sequence[Sequence[Any]],
            colrange: range,
            rowrange: range
            ) -> list[list[str]]:
        """Transpose and stringify the rows.

        Takes a sequence of rows and turns it into a list of columns of
        strings. Missing trailing cells are left empty."""
        cols: list[list[str]] = []
        for col in colrange:
            col_values: list[str] = []
            for row in rowrange:
                col_values.append(str(rows[row][col]) if col < len(rows[row]) else "")
            cols.append(col_values)
        return cols

    def _preformat_headers(self, headers: Sequence[str], colrange: range) -> list[str]:
        """Preformat header cells by adding any pre- and post-datum formatting."""
        return [
            "".join((self.fmt["head_cell_pre"], str(headers[col]), self.fmt["head_cell_post"]))
            for col in colrange
        ]

    def _preformat_cells(
            self,
            data: list[list[str]],
            colrange: range,
            rowrange: range
            ) -> list[list[str]]:
        """Preformat cells by adding any pre- and post-datum formatting."""
        for col in colrange:
            for row in rowrange:
                data[col][row] = "".join((
                    self.fmt["cell_pre"],
                    data[col][row],
                    self.fmt["cell_post"]
                ))
        return data

    def _align_columns(
            self,
            data: list[list[str]],
            heads: list[str],
            colrange: range,
            rowrange: range
            ) -> tuple[list[list[str]], list[str]]:
        """Align cell content in each column with spaces to be the same width."""
        for col in colrange:
            max_width = max([len(heads[col])] + [len(cell) for cell in data[col]])
            heads[col] = heads[col].rjust(max_width)
            for row in rowrange:
                data[col][row] = data[col][row].rjust(max_width)
        return (data, heads)

    def _rule(
            self,
            widths: list[int],
            left: str,
            bar: str,
            junction: str,
            right: str
            ) -> str | None:
        if not bar:
            return None
        return left + junction.join(bar * width for width in widths) + right

    def _build_string(
            self,
            data: list[list[str]],
            heads: list[str],
            colrange: range,
            rowrange: range
            ) -> str:
        fmt = self.fmt
        widths = [len(head) for head in heads]
        lines: list[str | None] = []
        lines.append(self._rule(
            widths, fmt["top_left_corner"], fmt["top_bar"], fmt["top_junction"],
            fmt["top_right_corner"]
        ))
        lines.append(fmt["head_left_bar"] + fmt["head_div_bar"].join(heads) + fmt["head_right_bar"])
        lines.append(self._rule(
            widths, fmt["head_bottom_left_junction"], fmt["head_bottom_bar"],
            fmt["head_bottom_junction"], fmt["head_bottom_right_junction"]
        ))
        for row in rowrange:
            cells = [data[col][row] for col in colrange]
            lines.append(fmt["left_bar"] + fmt["div_bar"].join(cells) + fmt["right_bar"])
        lines.append(self._rule(
            widths, fmt["bottom_left_corner"], fmt["bottom_bar"], fmt["bottom_junction"],
            fmt["bottom_right_corner"]
        ))
        return "\n".join(line for line in lines if line is not None)


PlainFormatter = Formatter({
    "top_left_corner":            "",
    "top_bar":                    "",
    "top_junction":               "",
    "top_right_corner":           "",
    "head_left_bar":              "",
    "head_div_bar":               "",
    "head_right_bar":             "",
    "head_bottom_left_junction":  "",
    "head_bottom_bar":            "",
    "head_bottom_junction":       "",
    "head_bottom_right_junction": "",
    "left_bar":                   "",
    "div_bar":                    "",
    "right_bar":                  "",
    "bottom_left_corner":         "",
    "bottom_bar":                 "",
    "bottom_junction":            "",
    "bottom_right_corner":        "",
    "head_cell_pre":              " ",
    "head_cell_post":             " ",
    "cell_pre":                   " ",
    "cell_post":                  " "
})

SimpleFormatter = Formatter({
    "top_left_corner":            "+",
    "top_bar":                    "-",
    "top_junction":               "+",
    "top_right_corner":           "+",
    "head_left_bar":              "|",
    "head_div_bar":               "|",
    "head_right_bar":             "|",
    "head_bottom_left_junction":  "+",
    "head_bottom_bar":            "=",
    "head_bottom_junction":       "+",
    "head_bottom_right_junction": "+",
    "left_bar":                   "|",
    "div_bar":                    "|",
    "right_bar":                  "|",
    "bottom_left_corner":         "+",
    "bottom_bar":                 "-",
    "bottom_junction":            "+",
    "bottom_right_corner":        "+",
    "head_cell_pre":              " ",
    "head_cell_post":             " ",
    "cell_pre":                   " ",
    "cell_post":                  " "
})

FancyFormatter = Formatter({
    "top_left_corner":            "╔",
    "top_bar":                    "═",
    "top_junction":               "╦",
    "top_right_corner":           "╗",
    "head_left_bar":              "║",
    "head_div_bar":               "║",
    "head_right_bar":             "║",
    "head_bottom_left_junction":  "╠",
    "head_bottom_bar":            "═",
    "head_bottom_junction":       "╬",
    "head_bottom_right_junction": "╣",
    "left_bar":                   "║",
    "div_bar":                    "│",
    "right_bar":                  "║",
    "bottom_left_corner":         "╚",
    "bottom_bar":                 "═",
    "bottom_junction":            "╩",
    "bottom_right_corner":        "╝",
    "head_cell_pre":              " ",
    "head_cell_post":             " ",
    "cell_pre":                   " ",
    "cell_post":                  " "
})

DefaultFormatter = SimpleFormatter
