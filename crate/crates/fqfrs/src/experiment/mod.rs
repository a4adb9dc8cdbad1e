//! Noise-robustness benchmarking: datasets, similarity relations,
//! nearest-concept classification, cross-validated sweeps, and rank statistics.

pub mod classify;
pub mod dataset;
pub mod stats;
pub mod sweep;

pub use classify::{balanced_accuracy, class_concepts, classify, classify_with_foresets};
pub use dataset::{
    inject_label_noise, load_csv, similarity, similarity_relation, stratified_kfold,
    DecisionSystem,
};
pub use stats::{fractional_rank, wilcoxon_signed_rank};
pub use sweep::{
    dataset_name, pairwise_stats, plot_data, plotdata_csv, read_results_csv, results_csv,
    run_sweep, stats_csv, write_plotdata_csv, write_results_csv, write_stats_csv,
    ExperimentConfig, PlotRow, ResultRow, StatsRow, SweepOutput,
};
