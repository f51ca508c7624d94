"""
Charts for search experiments, the alpha bisection and grid pictures.
"""

from pathlib import Path
from typing import Optional

import matplotlib.pyplot as plt
import numpy as np
import pandas as pd
import seaborn as sns
from loguru import logger

from src.continuous.optimize import OptimizeResult
from src.core.grid import GridLabelling
from src.utils.helpers import PathLike, has_rows


def _save(output_path: PathLike) -> Path:
    output_path = Path(output_path)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    plt.tight_layout()
    plt.savefig(output_path, dpi=100, bbox_inches="tight")
    logger.info(f"[VIZ] Chart saved: {output_path}")
    plt.close()
    return output_path


def plot_alpha_trace(trace: pd.DataFrame, output_path: PathLike) -> Optional[Path]:
    """Optimal five-cuboid score at each alpha the bisection evaluated."""
    if not has_rows(trace, "alpha trace", ("alpha", "value", "holds")):
        return None
    try:
        ordered = trace.sort_values("alpha")
        plt.figure(figsize=(10, 5))
        colors = np.where(ordered["holds"], "#27ae60", "#e74c3c")
        plt.scatter(ordered["alpha"], ordered["value"], c=colors, zorder=3)
        plt.plot(ordered["alpha"], ordered["value"], color="steelblue", alpha=0.5)
        plt.axhline(1.0, color="black", linestyle="--", linewidth=1)
        plt.xlabel("alpha")
        plt.ylabel("max score over x")
        plt.title("Bisection on alpha")
        return _save(output_path)
    except Exception as e:
        logger.error(f"[VIZ] Error in alpha trace chart: {e}")
        plt.close()
        return None


def plot_score_curve(curve: pd.DataFrame, result: OptimizeResult, output_path: PathLike) -> Optional[Path]:
    """family_score over x with the optimum marked."""
    if not has_rows(curve, "score curve", ("x", "value")):
        return None
    try:
        plt.figure(figsize=(10, 5))
        plt.plot(curve["x"], curve["value"], color="steelblue")
        plt.axvline(result.x_star, color="coral", linestyle="--")
        plt.scatter([result.x_star], [result.value], color="coral", zorder=3)
        plt.axhline(1.0, color="black", linestyle=":", linewidth=1)
        plt.xlabel("x")
        plt.ylabel("score")
        plt.title(f"Five-cuboid score at alpha={result.alpha:g}, x*={result.x_star:.6f}")
        return _save(output_path)
    except Exception as e:
        logger.error(f"[VIZ] Error in score curve chart: {e}")
        plt.close()
        return None


def plot_grid_heatmap(grid: GridLabelling, output_path: PathLike) -> Optional[Path]:
    """Grid labelling as an annotated heatmap, top row first."""
    try:
        values = np.full((grid.rows, grid.cols), np.nan)
        for (x, y), label in grid.cells.items():
            values[grid.rows - y, x - 1] = label
        frame = pd.DataFrame(
            values,
            index=range(grid.rows, 0, -1),
            columns=range(1, grid.cols + 1),
        )
        plt.figure(figsize=(max(4, grid.cols * 0.6), max(4, grid.rows * 0.6)))
        sns.heatmap(frame, annot=True, fmt=".0f", cmap="viridis", cbar=False, linewidths=0.5, linecolor="white")
        plt.xlabel("x")
        plt.ylabel("y")
        plt.title(f"Grid with coordinate {grid.label_coord} as label")
        return _save(output_path)
    except Exception as e:
        logger.error(f"[VIZ] Error in grid heatmap: {e}")
        plt.close()
        return None


def plot_length_histogram(runs: pd.DataFrame, output_path: PathLike, column: str = "length") -> Optional[Path]:
    """Histogram of sequence lengths (growth runs) or retained sizes (sampling runs)."""
    if not has_rows(runs, "runs", (column,)):
        return None
    try:
        plt.figure(figsize=(10, 5))
        hue = "policy" if "policy" in runs.columns else None
        sns.histplot(data=runs, x=column, hue=hue, discrete=True, multiple="dodge")
        plt.xlabel(column)
        plt.ylabel("runs")
        plt.title(f"Distribution of {column} over {len(runs)} runs")
        return _save(output_path)
    except Exception as e:
        logger.error(f"[VIZ] Error in histogram: {e}")
        plt.close()
        return None
