use entanglement_metrics::{rci_direct, rci_upper_bound};
use gain_policy::optimal_gain;
use gaussian_engine::{
    db_to_r, fidelity_direct, required_displacement, total_fidelity_direct, ChannelSample, EngineError,
    ProtocolParams, TmsvParams,
};
use nongaussian::{best_gain, optimize_ancilla_param, AncillaFamily, NonGaussOpKind, PolyGaussianCF};
use rayon::prelude::*;
use turbulence_channel::TransmissivityDistribution;

use crate::config::{ExperimentConfig, Scenario};
use crate::error::CliError;
use crate::pool::{apply_post_selection, channel_for, draw_triples, fading_pool};
use crate::streams::{mean_se, sample_stream};
use crate::table::{num, ResultTable};

/// Named tables produced by one scenario run.
pub type Tables = Vec<(String, ResultTable)>;

pub fn run(cfg: &ExperimentConfig) -> Result<Tables, CliError> {
    cfg.validate()?;
    let name = cfg.scenario.name().to_string();
    Ok(match cfg.scenario {
        Scenario::FidelitySweep => vec![(name, run_fidelity_sweep(cfg)?)],
        Scenario::ClassicalSweep => vec![(name, run_classical_sweep(cfg)?)],
        Scenario::NongaussCompare => vec![(name, run_nongauss_compare(cfg)?)],
        Scenario::RciSweep => vec![(name, run_rci_sweep(cfg)?)],
        Scenario::TurbulencePdf => {
            let (hist, summary) = run_turbulence_pdf(cfg)?;
            vec![(name, hist), ("turbulence_summary".into(), summary)]
        }
    })
}

fn distribution(pool: Vec<f64>, p_e: f64) -> Result<TransmissivityDistribution, CliError> {
    Ok(TransmissivityDistribution::new(pool, p_e, "pool")?)
}

/// Mean per-realization optimum fidelity against erasure-mixed direct
/// transmission. Sample streams are keyed by the link point so every `p_e`
/// sees the same uniforms.
pub fn run_fidelity_sweep(cfg: &ExperimentConfig) -> Result<ResultTable, CliError> {
    let pr = &cfg.protocol;
    let ens = pr.ensemble()?;
    let mut table = ResultTable::new(&[
        "distance_m",
        "aperture_m",
        "p_e",
        "f_protocol",
        "f_protocol_se",
        "f_direct",
        "throughput",
        "n",
        "seed",
    ]);
    let tag = Scenario::FidelitySweep.tag();
    for (pi, (l, rd)) in cfg.link.points().into_iter().enumerate() {
        let pool = fading_pool(cfg, l, rd)?;
        let f_dir = total_fidelity_direct(&pool, ens);
        for &p_e in &cfg.p_e_list {
            let dist = distribution(pool.clone(), p_e)?;
            let triples = draw_triples(&dist, cfg.n_samples, |i| sample_stream(cfg.master_seed, tag, pi as u64, i));
            let sel = apply_post_selection(&triples, cfg.post_select);
            let fids = sel
                .triples
                .par_iter()
                .map(|&t| {
                    let p = ProtocolParams::new(channel_for(t, pr), pr.eta2, 0.0, pr.tmsv());
                    optimal_gain(&p, ens).map(|s| s.f_opt.clamp(0.0, 1.0))
                })
                .collect::<Result<Vec<f64>, _>>()?;
            let (m, se) = mean_se(&fids);
            let direct = (1.0 - p_e) * f_dir + p_e * fidelity_direct(0.0, ens);
            table.push(vec![
                num(l),
                num(rd),
                num(p_e),
                num(m),
                num(se),
                num(direct),
                num(sel.throughput),
                fids.len().to_string(),
                cfg.master_seed.to_string(),
            ]);
        }
    }
    Ok(table)
}

/// Mean `|Δ|` keeping the BER at the target, with mode 1 or mode 3 erased
/// and the other two channels drawn from the fading pool.
pub fn run_classical_sweep(cfg: &ExperimentConfig) -> Result<ResultTable, CliError> {
    let pr = &cfg.protocol;
    let ens = pr.ensemble()?;
    let model = pr.syndrome_model.into();
    let mut table = ResultTable::new(&[
        "distance_m",
        "aperture_m",
        "erased_mode",
        "ber_target",
        "mean_delta",
        "se_delta",
        "n",
        "seed",
    ]);
    let tag = Scenario::ClassicalSweep.tag();
    let mut point = 0u64;
    for (l, rd) in cfg.link.points() {
        let dist = distribution(fading_pool(cfg, l, rd)?, 0.0)?;
        for erased in [1usize, 3] {
            let triples = draw_triples(&dist, cfg.n_samples, |i| sample_stream(cfg.master_seed, tag, point, i));
            point += 1;
            let deltas = triples
                .par_iter()
                .map(|&t| {
                    let mut t = t;
                    t[erased - 1] = 0.0;
                    let p = ProtocolParams::new(channel_for(t, pr), pr.eta2, 0.0, pr.tmsv());
                    let s = gaussian_engine::syndrome::syndrome(&p, ens, model);
                    match required_displacement(pr.ber_target, &s, p.eta(), p.derived().t_plus) {
                        Ok(d) => Ok(Some(d)),
                        Err(EngineError::DegenerateChannel) => Ok(None),
                        Err(e) => Err(e),
                    }
                })
                .collect::<Result<Vec<Option<f64>>, _>>()?;
            let deltas: Vec<f64> = deltas.into_iter().flatten().collect();
            let (m, se) = mean_se(&deltas);
            table.push(vec![
                num(l),
                num(rd),
                erased.to_string(),
                num(pr.ber_target),
                num(m),
                num(se),
                deltas.len().to_string(),
                cfg.master_seed.to_string(),
            ]);
        }
    }
    Ok(table)
}

pub fn nongauss_families() -> Vec<AncillaFamily> {
    let mut f: Vec<AncillaFamily> = NonGaussOpKind::ALL.iter().map(|&k| AncillaFamily::Op(k)).collect();
    f.push(AncillaFamily::SqueezedBell);
    f
}

/// Simplified channel for the ancilla comparison: `T′` on the surviving
/// modes, no excess noise, unit efficiency.
pub fn nongauss_channel(t_prime: f64, erased_mode: usize) -> ChannelSample {
    let mut t = [t_prime; 3];
    if erased_mode > 0 {
        t[erased_mode - 1] = 0.0;
    }
    ChannelSample::shared(t, 0.0)
}

/// Optimised fidelity of the TMSV and each non-Gaussian ancilla over the `T′` grid.
pub fn run_nongauss_compare(cfg: &ExperimentConfig) -> Result<ResultTable, CliError> {
    let ng = &cfg.nongauss;
    let ens = cfg.protocol.ensemble()?;
    let r = db_to_r(ng.r_db);
    let mut table =
        ResultTable::new(&["t_prime", "ancilla", "param", "g_opt", "fidelity", "f_tmsv_closed", "gap"]);
    let families = nongauss_families();
    for &tp in &ng.t_prime {
        let p = ProtocolParams::new(nongauss_channel(tp, ng.erased_mode), 1.0, 0.0, TmsvParams::new(r));
        let closed = optimal_gain(&p, ens)?;
        let tmsv = best_gain(&PolyGaussianCF::tmsv(r), &p, ens)?;
        table.push(vec![
            num(tp),
            "TMSV".into(),
            String::new(),
            num(tmsv.g_opt),
            num(tmsv.f_opt),
            num(closed.f_opt),
            num(tmsv.f_opt - closed.f_opt),
        ]);
        let opts = families
            .par_iter()
            .map(|&fam| optimize_ancilla_param(fam, r, &p, ens))
            .collect::<Result<Vec<_>, _>>()?;
        for (fam, o) in families.iter().zip(opts) {
            table.push(vec![
                num(tp),
                fam.name().into(),
                num(o.param),
                num(o.g_opt),
                num(o.f_opt),
                num(closed.f_opt),
                num(o.f_opt - closed.f_opt),
            ]);
        }
    }
    Ok(table)
}

pub fn rci_params(cfg: &ExperimentConfig) -> ProtocolParams {
    ProtocolParams::new(ChannelSample::shared([1.0; 3], cfg.rci.eps), 1.0, 0.0, TmsvParams::new(cfg.rci.r))
}

/// Protocol bound and direct-transmission RCI over `T′` and `p_e`.
pub fn run_rci_sweep(cfg: &ExperimentConfig) -> Result<ResultTable, CliError> {
    let p = rci_params(cfg);
    let mut table = ResultTable::new(&["t_prime", "p_e", "r_protocol_ub", "r_direct"]);
    for &tp in &cfg.rci.t_prime {
        for &p_e in &cfg.p_e_list {
            let ub = rci_upper_bound(tp, p_e, &p)?;
            let direct = rci_direct(tp, p_e, cfg.rci.eps, cfg.rci.r)?;
            table.push(vec![num(tp), num(p_e), num(ub), num(direct)]);
        }
    }
    Ok(table)
}

/// Histogram over `[0, 1]` normalised to unit area.
pub fn histogram(samples: &[f64], bins: usize) -> Vec<(f64, f64, f64)> {
    let mut counts = vec![0usize; bins];
    for &t in samples {
        let k = ((t * bins as f64) as usize).min(bins - 1);
        counts[k] += 1;
    }
    let w = 1.0 / bins as f64;
    let n = samples.len() as f64;
    counts.iter().enumerate().map(|(k, &c)| (k as f64 * w, (k + 1) as f64 * w, c as f64 / (n * w))).collect()
}

/// Fading samples per link point (written to the cache) and their histogram.
/// Returns `(histogram, summary)`.
pub fn run_turbulence_pdf(cfg: &ExperimentConfig) -> Result<(ResultTable, ResultTable), CliError> {
    let mut cfg = cfg.clone();
    if cfg.cache_dir.is_none() {
        cfg.cache_dir = Some(cfg.output_path.join("cache"));
    }
    let mut hist = ResultTable::new(&["distance_m", "aperture_m", "bin_left", "bin_right", "density"]);
    let mut summary = ResultTable::new(&["distance_m", "aperture_m", "mean_t", "se_t", "n", "seed"]);
    for (l, rd) in cfg.link.points() {
        let pool = fading_pool(&cfg, l, rd)?;
        for (a, b, d) in histogram(&pool, cfg.histogram_bins) {
            hist.push(vec![num(l), num(rd), num(a), num(b), num(d)]);
        }
        let (m, se) = mean_se(&pool);
        summary.push(vec![num(l), num(rd), num(m), num(se), pool.len().to_string(), cfg.master_seed.to_string()]);
    }
    Ok((hist, summary))
}
