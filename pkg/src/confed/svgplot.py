"""Minimal self-contained SVG log-log scatter plots (no plotting dependency)."""

import math

_W, _H = 640, 480
_ML, _MR, _MT, _MB = 70, 20, 40, 50


def _decades(lo: float, hi: float):
    a = math.floor(math.log10(lo))
    b = math.ceil(math.log10(hi))
    if b - a > 30:  # cap tick count for extreme ranges
        step = (b - a) // 15 + 1
    else:
        step = 1
    return [10.0 ** e for e in range(int(a), int(b) + 1, step)], 10.0 ** a, 10.0 ** b


def loglog_scatter(path: str, x, y, line_x, line_y, title: str,
                   xlabel: str, ylabel: str) -> None:
    """Scatter of (x, y) with a reference polyline, both on log-log axes."""
    pts = [(float(a), float(b)) for a, b in zip(x, y) if a > 0 and b > 0]
    line = sorted((float(a), float(b)) for a, b in zip(line_x, line_y) if a > 0 and b > 0)
    allx = [a for a, _ in pts + line]
    ally = [b for _, b in pts + line]
    if not allx:
        allx, ally = [1.0], [1.0]
    xt, xlo, xhi = _decades(min(allx), max(allx))
    yt, ylo, yhi = _decades(min(ally), max(ally))

    def px(v):
        return _ML + (math.log10(v) - math.log10(xlo)) / (
            math.log10(xhi) - math.log10(xlo) or 1.0) * (_W - _ML - _MR)

    def py(v):
        return _H - _MB - (math.log10(v) - math.log10(ylo)) / (
            math.log10(yhi) - math.log10(ylo) or 1.0) * (_H - _MT - _MB)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" '
        f'viewBox="0 0 {_W} {_H}">',
        f'<rect width="{_W}" height="{_H}" fill="white"/>',
        f'<text x="{_W / 2:.0f}" y="24" text-anchor="middle" '
        f'font-family="sans-serif" font-size="15">{title}</text>',
    ]
    for v in xt:
        xx = px(v)
        out.append(f'<line x1="{xx:.1f}" y1="{_MT}" x2="{xx:.1f}" y2="{_H - _MB}" '
                   'stroke="#dddddd" stroke-width="1"/>')
        out.append(f'<text x="{xx:.1f}" y="{_H - _MB + 18}" text-anchor="middle" '
                   f'font-family="sans-serif" font-size="11">1e{int(math.log10(v))}</text>')
    for v in yt:
        yy = py(v)
        out.append(f'<line x1="{_ML}" y1="{yy:.1f}" x2="{_W - _MR}" y2="{yy:.1f}" '
                   'stroke="#dddddd" stroke-width="1"/>')
        out.append(f'<text x="{_ML - 6}" y="{yy + 4:.1f}" text-anchor="end" '
                   f'font-family="sans-serif" font-size="11">1e{int(math.log10(v))}</text>')
    out.append(f'<rect x="{_ML}" y="{_MT}" width="{_W - _ML - _MR}" '
               f'height="{_H - _MT - _MB}" fill="none" stroke="black"/>')
    out.append(f'<text x="{_W / 2:.0f}" y="{_H - 12}" text-anchor="middle" '
               f'font-family="sans-serif" font-size="13">{xlabel}</text>')
    out.append(f'<text x="16" y="{_H / 2:.0f}" text-anchor="middle" '
               f'font-family="sans-serif" font-size="13" '
               f'transform="rotate(-90 16 {_H / 2:.0f})">{ylabel}</text>')
    if line:
        d = " ".join(f"{px(a):.2f},{py(b):.2f}" for a, b in line)
        out.append(f'<polyline points="{d}" fill="none" stroke="#d62728" stroke-width="1.5"/>')
    for a, b in pts:
        out.append(f'<circle cx="{px(a):.2f}" cy="{py(b):.2f}" r="2.2" '
                   'fill="#1f77b4" fill-opacity="0.75"/>')
    out.append("</svg>")
    with open(path, "w") as f:
        f.write("\n".join(out) + "\n")
