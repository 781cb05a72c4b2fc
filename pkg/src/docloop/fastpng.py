"""Streaming PNG writer for A4 placement variants.

An A4 variant is a white canvas with one resized document pasted into a known
band of rows. Building the 26 MB canvas just to PNG-encode it wastes most of
the time on blank pixels, so this writer assembles the PNG stream directly:

  - the all-white row runs above and below the document band are deflate
    chunks that depend only on their row count, cached and reused across
    every variant and every base;
  - only the band itself (document row flanked by white) is filtered and
    deflated per variant;
  - the zlib container is assembled by hand from raw deflate segments split
    on full-flush byte boundaries, with one adler32 over the filtered stream.

The output must decode to exactly the pixels of the composed canvas.
"""
from __future__ import annotations

import hashlib
import struct
import zlib
from functools import lru_cache
from pathlib import Path

import numpy as np
from PIL import Image

_PNG_SIGNATURE = b"\x89PNG\r\n\x1a\n"
_ZLIB_HEADER = b"\x78\x01"  # deflate, fastest flevel; (0x78*256+0x01) % 31 == 0

# mode -> (channels, PNG color type)
_MODES = {"RGB": (3, 2), "L": (1, 0)}


def _chunk(chunk_type: bytes, data: bytes) -> bytes:
    return (
        struct.pack(">I", len(data))
        + chunk_type
        + data
        + struct.pack(">I", zlib.crc32(chunk_type + data))
    )


@lru_cache(maxsize=16)
def _white_raw(row_len: int, rows: int) -> bytes:
    """``rows`` unfiltered all-white scanlines."""
    return b"\xff" * (row_len * rows)


@lru_cache(maxsize=16)
def _white_filtered(row_len: int, rows: int) -> bytes:
    """``rows`` filter-0 all-white scanlines (leading 0x00 per row)."""
    return (b"\x00" + b"\xff" * row_len) * rows


@lru_cache(maxsize=64)
def _white_deflate(row_len: int, rows: int, final: bool) -> bytes:
    """Raw-deflate segment for a run of white scanlines.

    Non-final segments end on a full-flush byte boundary so independently
    produced segments concatenate into one valid deflate stream.
    """
    compressor = zlib.compressobj(1, zlib.DEFLATED, -15)
    data = compressor.compress(_white_filtered(row_len, rows))
    if final:
        return data + compressor.flush()
    return data + compressor.flush(zlib.Z_FULL_FLUSH)


def write_a4_png(
    path: str | Path,
    document: Image.Image,
    position: tuple[int, int],
    canvas_size: tuple[int, int],
) -> str:
    """Write the A4 variant PNG and return the canvas's content hash.

    ``document`` is the already-resized card (mode RGB or L); the canvas is
    white, mode-matched, with the document pasted at ``position``.
    """
    mode = document.mode
    if mode not in _MODES:
        raise ValueError(f"unsupported mode {mode!r}")
    channels, color_type = _MODES[mode]
    canvas_w, canvas_h = canvas_size
    doc_w, doc_h = document.size
    x, y = position
    if x + doc_w > canvas_w or y + doc_h > canvas_h:
        raise ValueError(f"{doc_w}x{doc_h} document at {position} exceeds {canvas_size}")

    row_len = canvas_w * channels
    doc_rows = np.frombuffer(document.tobytes(), dtype=np.uint8).reshape(
        doc_h, doc_w * channels
    )

    # band: document rows padded with white on both sides, raw and filtered
    band_raw = np.full((doc_h, row_len), 255, dtype=np.uint8)
    band_raw[:, x * channels : (x + doc_w) * channels] = doc_rows
    band_filtered = np.full((doc_h, row_len + 1), 255, dtype=np.uint8)
    band_filtered[:, 0] = 0
    band_filtered[:, 1:] = band_raw
    band_raw_bytes = band_raw.tobytes()
    band_filtered_bytes = band_filtered.tobytes()

    rows_above = y
    rows_below = canvas_h - y - doc_h

    # content hash over the raster exactly as image_content_hash computes it
    digest = hashlib.sha256()
    digest.update(mode.encode("ascii"))
    digest.update(b"%dx%d" % (canvas_w, canvas_h))
    if rows_above:
        digest.update(_white_raw(row_len, rows_above))
    digest.update(band_raw_bytes)
    if rows_below:
        digest.update(_white_raw(row_len, rows_below))

    # adler32 runs over the full filtered stream in order
    adler = zlib.adler32(b"")
    if rows_above:
        adler = zlib.adler32(_white_filtered(row_len, rows_above), adler)
    adler = zlib.adler32(band_filtered_bytes, adler)
    if rows_below:
        adler = zlib.adler32(_white_filtered(row_len, rows_below), adler)

    band_compressor = zlib.compressobj(1, zlib.DEFLATED, -15)
    band_deflate = band_compressor.compress(band_filtered_bytes)
    if rows_below:
        band_deflate += band_compressor.flush(zlib.Z_FULL_FLUSH)
        tail_deflate = _white_deflate(row_len, rows_below, True)
    else:
        band_deflate += band_compressor.flush()
        tail_deflate = b""

    idat = bytearray(_ZLIB_HEADER)
    if rows_above:
        idat += _white_deflate(row_len, rows_above, False)
    idat += band_deflate
    idat += tail_deflate
    idat += struct.pack(">I", adler & 0xFFFFFFFF)

    ihdr = struct.pack(">IIBBBBB", canvas_w, canvas_h, 8, color_type, 0, 0, 0)
    with open(path, "wb") as fh:
        fh.write(_PNG_SIGNATURE)
        fh.write(_chunk(b"IHDR", ihdr))
        fh.write(_chunk(b"IDAT", bytes(idat)))
        fh.write(_chunk(b"IEND", b""))
    return digest.hexdigest()
