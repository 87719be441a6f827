"""Render a handful of subdivisions to SVG files."""
import argparse
from dataclasses import dataclass, field
from pathlib import Path

from goldenrect import layout, parse_golden, square_capacity
from goldenrect.render import RenderOptions, emit_svg


@dataclass(frozen=True)
class GalleryConfig:
    out_dir: Path = Path("gallery")
    golden_steps: int = 10
    ratios: tuple[str, ...] = field(default=("phi", "3/2", "13/8", "7/5", "1/2+3/4phi", "2"))
    width_px: int = 800


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", type=Path, default=GalleryConfig.out_dir)
    cfg = GalleryConfig(out_dir=ap.parse_args().out_dir)
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    opts = RenderOptions(width_px=cfg.width_px, show_labels=True)
    for text in cfg.ratios:
        m = parse_golden(text)
        steps = square_capacity(m) or cfg.golden_steps
        name = text.replace("/", "_").replace("+", "p")
        path = cfg.out_dir / f"{name}.svg"
        path.write_text(emit_svg(layout(m, 1, steps), opts), encoding="utf-8")
        print(f"{path}  ({steps} squares)")


if __name__ == "__main__":
    main()
