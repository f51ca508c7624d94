"""
VISUALIZATION Package: Chart generation.

This package contains functions to draw experiment outputs.
"""

from src.visualization.charts import (
    plot_alpha_trace,
    plot_grid_heatmap,
    plot_length_histogram,
    plot_score_curve,
)

__all__ = [
    "plot_alpha_trace",
    "plot_score_curve",
    "plot_grid_heatmap",
    "plot_length_histogram",
]
