"""
CSV output of reproduced tables and estimate grids
"""

import csv
import io

import numpy as np

from utils.exceptions import InputError


def format_value(value):
    """Floats in scientific notation with 6 significant digits; integers and text unchanged."""
    if value is None:
        return ""
    if isinstance(value, (bool, str)):
        return str(value)
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return f"{float(value):.5e}"


def table_fieldnames(result):
    keys = ("m",) if result.table_id == "appendix-b" else ("distribution", "n")
    return list(keys) + list(result.columns) + ["flags"]


def write_table(result, stream):
    """
    Write a TableResult as CSV.

    Args:
        result: TableResult
        stream: Text stream
    """
    writer = csv.DictWriter(stream, fieldnames=table_fieldnames(result), extrasaction="ignore",
                            lineterminator="\n")
    writer.writeheader()
    for row in result.rows:
        writer.writerow({key: format_value(value) for key, value in row.items()})


def table_to_csv(result):
    buffer = io.StringIO()
    write_table(result, buffer)
    return buffer.getvalue()


def write_grid(theta, values, stream, header=None):
    """
    Write (theta, value) rows with 17 significant digits.

    Args:
        theta: Angles
        values: Estimate values
        stream: Text stream
        header: Optional dict echoed as leading '# key: value' comment lines
    """
    for key, value in (header or {}).items():
        stream.write(f"# {key}: {value}\n")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["theta", "value"])
    for angle, value in zip(theta, values):
        writer.writerow([f"{angle:.17g}", f"{value:.17g}"])


def read_grid(stream):
    """
    Read a grid written by write_grid.

    Returns:
        (theta, values, header dict)
    """
    header = {}
    rows = []
    for line in stream:
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, _, value = line[1:].partition(":")
            header[key.strip()] = value.strip()
            continue
        rows.append(line)
    if not rows or rows[0] != "theta,value":
        raise InputError("grid file lacks the theta,value header")
    data = [row.split(",") for row in rows[1:]]
    theta = np.array([float(a) for a, _ in data])
    values = np.array([float(v) for _, v in data])
    return theta, values, header
