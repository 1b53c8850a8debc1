###################################################################################################
# MIT License
#
# Copyright (c) 2024 The autmap developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.
#
###################################################################################################

import json


def to_json(report) -> str:
    """
    Renders a report as JSON with sorted keys, so a request always produces
    the same bytes

    Args:
        report: The report, built from dicts, lists and scalars

    Returns:
        The JSON text
    """
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False)


def _cell(value) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True, ensure_ascii=False)
    if value is None:
        return "-"
    return str(value)


def to_table(report) -> str:
    """
    Renders a report for reading on a terminal: one row per entry for a
    list of records, one row per key otherwise

    Args:
        report: The report

    Returns:
        The table text
    """
    import prettytable

    table = prettytable.PrettyTable()
    if isinstance(report, list) and report and all(isinstance(r, dict) for r in report):
        columns = sorted({k for r in report for k in r})
        table.field_names = columns
        for r in report:
            table.add_row([_cell(r.get(k)) for k in columns])
    elif isinstance(report, dict):
        table.field_names = ["Key", "Value"]
        table.align["Key"] = "l"
        table.align["Value"] = "l"
        for k in sorted(report):
            table.add_row([k, _cell(report[k])])
    else:
        table.field_names = ["Value"]
        table.add_row([_cell(report)])
    return table.get_string()
