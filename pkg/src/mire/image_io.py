"""Grayscale raster IO and orientation utilities.

Images are carried as 2-D float64 numpy arrays (rows x columns). Integer
samples are normalized to [0, 1] on load by dividing by the file's declared
maximum sample value; saving quantizes back with round-half-away-from-zero.

Supported containers: binary PGM (P5, 8/16-bit big-endian samples) and
grayscale PNG (8/16-bit).
"""

import io
import re
from pathlib import Path

import numpy as np

FORMATS = ("pgm", "png")


class ImageError(Exception):
    """Base class for image decoding/encoding failures."""


class MalformedHeaderError(ImageError):
    """The file header could not be parsed as the requested format."""


class MultiChannelError(ImageError):
    """The file holds more than one channel; only grayscale is supported."""


class TruncatedDataError(ImageError):
    """The pixel payload ends before width * height samples."""


class UnsupportedBitDepthError(ImageError):
    """Requested bit depth is not 8 or 16."""


def _check_image(img):
    img = np.asarray(img, dtype=np.float64)
    if img.ndim != 2 or img.size == 0:
        raise ValueError("image must be a non-empty 2-D array")
    if not np.all(np.isfinite(img)):
        raise ValueError("image values must be finite")
    return img


# ---------------------------------------------------------------------------
# PGM (P5)
# ---------------------------------------------------------------------------

_PGM_TOKEN = re.compile(rb"^\s*(?:#[^\n\r]*[\n\r]\s*)*(\S+)")


def _pgm_read_tokens(data, count, start):
    """Read `count` whitespace-separated header tokens, skipping comments."""
    tokens = []
    pos = start
    for _ in range(count):
        m = _PGM_TOKEN.match(data[pos:])
        if m is None:
            raise MalformedHeaderError("incomplete PGM header")
        tokens.append(m.group(1))
        pos += m.end()
    return tokens, pos


def _decode_pgm(data):
    if data[:2] == b"P6":
        raise MultiChannelError("P6 is a color (3-channel) format")
    if data[:2] != b"P5":
        raise MalformedHeaderError("not a binary PGM (P5) file")
    try:
        tokens, pos = _pgm_read_tokens(data, 3, 2)
        width, height, maxval = (int(t) for t in tokens)
    except (ValueError, MalformedHeaderError):
        raise MalformedHeaderError("could not parse PGM dimensions/maxval")
    if width < 1 or height < 1 or not 0 < maxval < 65536:
        raise MalformedHeaderError(
            f"invalid PGM geometry {width}x{height} maxval {maxval}")
    pos += 1  # single whitespace byte terminates the header
    dtype = np.dtype(">u2") if maxval > 255 else np.dtype("u1")
    need = width * height * dtype.itemsize
    payload = data[pos:pos + need]
    if len(payload) < need:
        raise TruncatedDataError(
            f"PGM payload holds {len(payload)} bytes, expected {need}")
    samples = np.frombuffer(payload, dtype=dtype).reshape(height, width)
    bit_depth = 16 if maxval > 255 else 8
    return samples.astype(np.float64) / maxval, bit_depth


def _encode_pgm(samples, maxval):
    height, width = samples.shape
    header = f"P5\n{width} {height}\n{maxval}\n".encode("ascii")
    dtype = np.dtype(">u2") if maxval > 255 else np.dtype("u1")
    return header + samples.astype(dtype).tobytes()


# ---------------------------------------------------------------------------
# PNG (via Pillow)
# ---------------------------------------------------------------------------

_PNG_MULTICHANNEL_MODES = {"RGB", "RGBA", "LA", "PA", "P", "CMYK", "YCbCr"}


def _decode_png(data):
    from PIL import Image as PILImage
    from PIL import UnidentifiedImageError

    try:
        pil = PILImage.open(io.BytesIO(data))
        pil.load()
    except UnidentifiedImageError:
        raise MalformedHeaderError("not a decodable PNG file")
    except OSError as exc:
        raise TruncatedDataError(str(exc))
    if pil.mode in _PNG_MULTICHANNEL_MODES:
        raise MultiChannelError(f"PNG mode {pil.mode!r} is not single-channel")
    if pil.mode == "L":
        return np.asarray(pil, dtype=np.float64) / 255.0, 8
    if pil.mode in ("I;16", "I"):
        return np.asarray(pil, dtype=np.float64) / 65535.0, 16
    raise MalformedHeaderError(f"unsupported PNG mode {pil.mode!r}")


def _encode_png(samples, bit_depth):
    from PIL import Image as PILImage

    if bit_depth == 8:
        pil = PILImage.fromarray(samples.astype(np.uint8), mode="L")
    else:
        pil = PILImage.fromarray(samples.astype(np.uint16))
    buf = io.BytesIO()
    pil.save(buf, format="PNG")
    return buf.getvalue()


# ---------------------------------------------------------------------------
# Public API
# ---------------------------------------------------------------------------

def load_image(data, fmt):
    """Decode a PGM or PNG byte string into a float64 image in [0, 1].

    Parameters
    ----------
    data : bytes
        Raw file content.
    fmt : {'pgm', 'png'}
        Container format of `data`.

    Returns
    -------
    ndarray
        2-D float64 array, samples divided by the file's maximum value.

    Raises
    ------
    MalformedHeaderError, MultiChannelError, TruncatedDataError
    """
    img, _ = load_image_info(data, fmt)
    return img


def load_image_info(data, fmt):
    """Like :func:`load_image`, additionally returning the source bit depth."""
    fmt = fmt.lower()
    if fmt == "pgm":
        return _decode_pgm(bytes(data))
    if fmt == "png":
        return _decode_png(bytes(data))
    raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")


def save_image(img, fmt, bit_depth=8):
    """Encode an image to PGM or PNG bytes at the given bit depth.

    Values are clamped to [0, 1] and quantized with round-half-away-from-zero,
    so a decode of the result differs from the clamped input by at most half a
    quantization step per pixel.
    """
    fmt = fmt.lower()
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")
    if bit_depth not in (8, 16):
        raise UnsupportedBitDepthError(f"bit depth {bit_depth}, expected 8 or 16")
    img = _check_image(img)
    maxval = 255 if bit_depth == 8 else 65535
    samples = np.floor(np.clip(img, 0.0, 1.0) * maxval + 0.5)
    if fmt == "pgm":
        return _encode_pgm(samples, maxval)
    return _encode_png(samples, bit_depth)


def format_of(path):
    """Infer the container format from a file suffix."""
    suffix = Path(path).suffix.lower().lstrip(".")
    if suffix not in FORMATS:
        raise ValueError(f"cannot infer image format from {path!r}")
    return suffix


def read_image(path):
    """Read an image file, returning ``(image, bit_depth)``."""
    data = Path(path).read_bytes()
    return load_image_info(data, format_of(path))


def write_image(path, img, bit_depth=8):
    """Write an image file, format inferred from the suffix."""
    Path(path).write_bytes(save_image(img, format_of(path), bit_depth))


def transpose(img):
    """Swap rows and columns. Involution: ``transpose(transpose(x)) == x``."""
    return np.ascontiguousarray(np.asarray(img).T)


def reflect_column_index(i, width):
    """Map any integer index into [0, width) by whole-sample reflection.

    The edge sample is not repeated: for width 4 the extension reads
    ... 2 1 | 0 1 2 3 | 2 1 ... In-range indices are fixed points. Accepts
    scalars or integer arrays.
    """
    if width < 1:
        raise ValueError("width must be >= 1")
    if width == 1:
        return np.zeros_like(np.asarray(i)) if np.ndim(i) else 0
    period = 2 * (width - 1)
    r = np.mod(i, period)
    out = np.where(r >= width, period - r, r)
    return out if np.ndim(i) else int(out)
