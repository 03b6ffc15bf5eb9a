#!/usr/bin/env python3
"""Regenerates the shapefile test fixtures with pyshp (pip install pyshp).

Only the .shp main files are kept; the .shx/.dbf companions are discarded.
"""
import os
import sys
import tempfile

import shapefile

OUT = os.path.join(os.path.dirname(__file__), "..", "crates", "core", "tests", "fixtures")


def write(name, shape_type, fill):
    with tempfile.TemporaryDirectory() as tmp:
        base = os.path.join(tmp, name)
        w = shapefile.Writer(base, shapeType=shape_type)
        w.field("id", "N")
        fill(w)
        w.close()
        with open(base + ".shp", "rb") as f:
            data = f.read()
    with open(os.path.join(OUT, name + ".shp"), "wb") as f:
        f.write(data)
    print(f"{name}.shp: {len(data)} bytes")


def one_point(w):
    w.point(5.0, 7.0)
    w.record(1)


def empty(w):
    pass


def point_z(w):
    for i, (x, y, z) in enumerate([(1.5, -2.5, 10.0), (300050.0, 4999980.0, 0.0), (-0.25, 0.75, 3.0)]):
        w.pointz(x, y, z)
        w.record(i)


def five_points(w):
    # Centers of pixels (row, col) on a 256x256 raster with origin (1000, 2000)
    # and 10 m pixels; the last point lies west of the raster.
    for i, (row, col) in enumerate([(40, 40), (128, 128), (200, 60), (64, 190), (100, -30)]):
        w.point(1000.0 + (col + 0.5) * 10.0, 2000.0 - (row + 0.5) * 10.0)
        w.record(i)


def polygon(w):
    w.poly([[[0.0, 0.0], [0.0, 1.0], [1.0, 1.0], [1.0, 0.0], [0.0, 0.0]]])
    w.record(1)


if __name__ == "__main__":
    os.makedirs(OUT, exist_ok=True)
    write("one_point", shapefile.POINT, one_point)
    write("empty_points", shapefile.POINT, empty)
    write("pointz", shapefile.POINTZ, point_z)
    write("five_points", shapefile.POINT, five_points)
    write("polygon", shapefile.POLYGON, polygon)
    sys.exit(0)
