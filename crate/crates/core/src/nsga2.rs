//! Elitist NSGA-II over gene-per-node chromosomes.
//!
//! Each generation breeds `population_size` offspring by binary pairs of
//! 4-way tournaments, one-point crossover, and per-gene mutation, then keeps
//! the best `population_size` of parents and offspring by non-dominated rank
//! and crowding distance.
//!
//! All random draws happen on one sequential stream seeded from
//! [`GaConfig::seed`]. Only fitness evaluation runs in parallel, and its
//! results are collected in order, so a run is reproducible for any worker
//! count.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::encoding::{mutate_in_place, one_point_crossover, random_chromosome, random_site, Chromosome};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::objectives::{evaluate, ObjectivePair, ScoreParams};

/// Contestants per tournament.
pub const TOURNAMENT_SIZE: usize = 4;

#[derive(Debug, Clone, PartialEq)]
pub struct Individual {
    pub chromosome: Chromosome,
    pub objectives: ObjectivePair,
    /// Front index, starting at 1.
    pub rank: usize,
    pub crowding: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GaConfig {
    pub population_size: usize,
    pub generations: usize,
    pub crossover_prob: f64,
    pub mutation_prob: f64,
    /// Power-mean exponent of the community score.
    pub r: f64,
    pub seed: u64,
    /// Evaluation threads; 0 uses the global rayon pool. Does not affect results.
    #[serde(skip)]
    pub workers: usize,
}

impl Default for GaConfig {
    fn default() -> Self {
        GaConfig {
            population_size: 200,
            generations: 3000,
            crossover_prob: 0.7,
            mutation_prob: 0.03,
            r: 2.5,
            seed: 1,
            workers: 0,
        }
    }
}

impl GaConfig {
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidConfig(msg));
        if self.population_size == 0 || !self.population_size.is_multiple_of(2) {
            return fail(format!(
                "population size must be even and positive, got {}",
                self.population_size
            ));
        }
        if self.generations == 0 {
            return fail("generations must be positive".into());
        }
        for (name, p) in [
            ("crossover probability", self.crossover_prob),
            ("mutation probability", self.mutation_prob),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return fail(format!("{name} must lie in [0, 1], got {p}"));
            }
        }
        ScoreParams::new(self.r)?;
        Ok(())
    }

    pub fn score_params(&self) -> ScoreParams {
        ScoreParams { r: self.r }
    }
}

/// Population summary after one generation (generation 0 is the initial
/// population).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GenerationRecord {
    pub generation: usize,
    pub best_q: f64,
    pub best_cs: f64,
    pub front_size: usize,
    /// Lexicographically smallest `(f1, f2)` in the population.
    pub best_f1: f64,
    pub best_f2: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunResult {
    /// Rank-1 individuals of the final population.
    pub final_front: Vec<Individual>,
    /// Member of `final_front` with the highest modularity.
    pub best_by_q: Individual,
    pub history: Vec<GenerationRecord>,
}

/// Pareto dominance for minimization of `(f1, f2)`.
pub fn dominates(a: &ObjectivePair, b: &ObjectivePair) -> bool {
    a.f1 <= b.f1 && a.f2 <= b.f2 && (a.f1 < b.f1 || a.f2 < b.f2)
}

/// Splits `objs` into non-dominated fronts of indices, best front first.
/// Indices within a front are ascending.
pub fn fast_nondominated_sort(objs: &[ObjectivePair]) -> Vec<Vec<usize>> {
    let n = objs.len();
    let mut dominated_by_me: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut domination_count = vec![0usize; n];
    for i in 0..n {
        for j in (i + 1)..n {
            if dominates(&objs[i], &objs[j]) {
                dominated_by_me[i].push(j);
                domination_count[j] += 1;
            } else if dominates(&objs[j], &objs[i]) {
                dominated_by_me[j].push(i);
                domination_count[i] += 1;
            }
        }
    }
    let mut fronts = Vec::new();
    let mut current: Vec<usize> = (0..n).filter(|&i| domination_count[i] == 0).collect();
    while !current.is_empty() {
        let mut next = Vec::new();
        for &i in &current {
            for &j in &dominated_by_me[i] {
                domination_count[j] -= 1;
                if domination_count[j] == 0 {
                    next.push(j);
                }
            }
        }
        next.sort_unstable();
        fronts.push(std::mem::replace(&mut current, next));
    }
    fronts
}

/// Crowding distance of each member of `front`, in the order given.
///
/// Per objective the front is stably sorted; the first and last positions get
/// infinity and interior members add `(next - prev) / (max - min)`, or nothing
/// when `max == min`.
pub fn crowding_distance(objs: &[ObjectivePair], front: &[usize]) -> Vec<f64> {
    let len = front.len();
    let mut distance = vec![0.0; len];
    if len <= 2 {
        return vec![f64::INFINITY; len];
    }
    let objectives: [fn(&ObjectivePair) -> f64; 2] = [|o| o.f1, |o| o.f2];
    for value in objectives {
        let mut order: Vec<usize> = (0..len).collect();
        order.sort_by(|&a, &b| value(&objs[front[a]]).total_cmp(&value(&objs[front[b]])));
        distance[order[0]] = f64::INFINITY;
        distance[order[len - 1]] = f64::INFINITY;
        let lo = value(&objs[front[order[0]]]);
        let hi = value(&objs[front[order[len - 1]]]);
        let span = hi - lo;
        if span <= 0.0 {
            continue;
        }
        for w in order.windows(3) {
            let gap = value(&objs[front[w[2]]]) - value(&objs[front[w[0]]]);
            distance[w[1]] += gap / span;
        }
    }
    distance
}

/// Better-first ordering used by the tournament: lower rank, then larger
/// crowding distance, then lower population index.
fn tournament_order(pop: &[Individual], a: usize, b: usize) -> Ordering {
    pop[a]
        .rank
        .cmp(&pop[b].rank)
        .then_with(|| pop[b].crowding.total_cmp(&pop[a].crowding))
        .then_with(|| a.cmp(&b))
}

/// Picks the winner among the given contestant indices.
pub fn tournament_winner(pop: &[Individual], contestants: &[usize]) -> usize {
    contestants
        .iter()
        .copied()
        .min_by(|&a, &b| tournament_order(pop, a, b))
        .expect("at least one contestant")
}

/// Draws [`TOURNAMENT_SIZE`] contestants uniformly with replacement and
/// returns the index of the winner.
pub fn tournament_select<R: Rng + ?Sized>(pop: &[Individual], rng: &mut R) -> usize {
    assert!(!pop.is_empty(), "tournament over an empty population");
    let contestants: [usize; TOURNAMENT_SIZE] =
        std::array::from_fn(|_| rng.random_range(0..pop.len()));
    tournament_winner(pop, &contestants)
}

/// Sets rank and crowding distance on every individual. Returns the fronts.
pub fn assign_rank_and_crowding(pop: &mut [Individual]) -> Vec<Vec<usize>> {
    let objs: Vec<ObjectivePair> = pop.iter().map(|i| i.objectives).collect();
    let fronts = fast_nondominated_sort(&objs);
    for (rank, front) in fronts.iter().enumerate() {
        let crowd = crowding_distance(&objs, front);
        for (&i, d) in front.iter().zip(crowd) {
            pop[i].rank = rank + 1;
            pop[i].crowding = d;
        }
    }
    fronts
}

/// Keeps `size` individuals front by front, cutting the last admitted front
/// by descending crowding distance (ties to the lower index).
fn environmental_selection(mut combined: Vec<Individual>, size: usize) -> Vec<Individual> {
    let fronts = assign_rank_and_crowding(&mut combined);
    let mut keep = Vec::with_capacity(size);
    for mut front in fronts {
        if keep.len() + front.len() <= size {
            keep.extend(front);
        } else {
            front.sort_by(|&a, &b| {
                combined[b]
                    .crowding
                    .total_cmp(&combined[a].crowding)
                    .then_with(|| a.cmp(&b))
            });
            keep.extend(front.into_iter().take(size - keep.len()));
        }
        if keep.len() == size {
            break;
        }
    }
    let mut slots: Vec<Option<Individual>> = combined.into_iter().map(Some).collect();
    keep.into_iter()
        .map(|i| slots[i].take().expect("each index kept once"))
        .collect()
}

struct Evaluator<'a> {
    graph: &'a Graph,
    params: ScoreParams,
    pool: Option<rayon::ThreadPool>,
}

impl Evaluator<'_> {
    fn evaluate_all(&self, chromosomes: Vec<Chromosome>) -> Result<Vec<Individual>> {
        let run = || {
            chromosomes
                .into_par_iter()
                .map(|c| {
                    let objectives = evaluate(self.graph, &c, self.params)?;
                    Ok(Individual {
                        chromosome: c,
                        objectives,
                        rank: 0,
                        crowding: 0.0,
                    })
                })
                .collect::<Result<Vec<_>>>()
        };
        match &self.pool {
            Some(pool) => pool.install(run),
            None => run(),
        }
    }
}

fn summarize(generation: usize, pop: &[Individual]) -> GenerationRecord {
    let lexmin = pop
        .iter()
        .map(|i| i.objectives)
        .min_by(|a, b| a.f1.total_cmp(&b.f1).then(a.f2.total_cmp(&b.f2)))
        .expect("non-empty population");
    GenerationRecord {
        generation,
        best_q: pop.iter().map(|i| i.objectives.q).fold(f64::NEG_INFINITY, f64::max),
        best_cs: pop.iter().map(|i| i.objectives.cs).fold(f64::NEG_INFINITY, f64::max),
        front_size: pop.iter().filter(|i| i.rank == 1).count(),
        best_f1: lexmin.f1,
        best_f2: lexmin.f2,
    }
}

/// Produces `population_size` offspring chromosomes. Consumes random draws in
/// a fixed order: per pair, two tournaments, the crossover coin, the site,
/// then the mutation masks of both children.
fn breed<R: Rng + ?Sized>(pop: &[Individual], config: &GaConfig, rng: &mut R) -> Vec<Chromosome> {
    let n = pop[0].chromosome.len();
    let mut offspring = Vec::with_capacity(config.population_size);
    while offspring.len() < config.population_size {
        let a = &pop[tournament_select(pop, rng)].chromosome;
        let b = &pop[tournament_select(pop, rng)].chromosome;
        let (mut c1, mut c2) = match rng.random_bool(config.crossover_prob) {
            true => match random_site(n, rng) {
                Some(site) => one_point_crossover(a, b, site).expect("parents share length"),
                None => (a.clone(), b.clone()),
            },
            false => (a.clone(), b.clone()),
        };
        mutate_in_place(&mut c1, config.mutation_prob, rng);
        mutate_in_place(&mut c2, config.mutation_prob, rng);
        offspring.push(c1);
        offspring.push(c2);
    }
    offspring
}

/// Runs the full evolution. Deterministic for a given graph and config.
pub fn evolve(g: &Graph, config: &GaConfig) -> Result<RunResult> {
    evolve_with_progress(g, config, |_| {})
}

/// Like [`evolve`], calling `progress` after every generation.
pub fn evolve_with_progress<F>(g: &Graph, config: &GaConfig, mut progress: F) -> Result<RunResult>
where
    F: FnMut(&GenerationRecord),
{
    config.validate()?;
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let pool = match config.workers {
        0 => None,
        w => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(w)
                .build()
                .map_err(|e| Error::InvalidConfig(format!("thread pool: {e}")))?,
        ),
    };
    let evaluator = Evaluator {
        graph: g,
        params: config.score_params(),
        pool,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let n = g.node_count();

    let initial = (0..config.population_size)
        .map(|_| random_chromosome(n, &mut rng))
        .collect();
    let mut population = evaluator.evaluate_all(initial)?;
    assign_rank_and_crowding(&mut population);

    let mut history = Vec::with_capacity(config.generations + 1);
    history.push(summarize(0, &population));
    progress(&history[0]);

    for generation in 1..=config.generations {
        let offspring = evaluator.evaluate_all(breed(&population, config, &mut rng))?;
        let mut combined = population;
        combined.extend(offspring);
        population = environmental_selection(combined, config.population_size);
        let record = summarize(generation, &population);
        progress(&record);
        history.push(record);
    }

    let final_front: Vec<Individual> = population.into_iter().filter(|i| i.rank == 1).collect();
    let best_by_q = final_front
        .iter()
        .min_by(|a, b| {
            b.objectives
                .q
                .total_cmp(&a.objectives.q)
                .then(a.objectives.f2.total_cmp(&b.objectives.f2))
        })
        .cloned()
        .expect("rank-1 front is never empty");
    Ok(RunResult {
        final_front,
        best_by_q,
        history,
    })
}
