use std::thread;

use kpartite_ao::oracle::{
    acyclic_orientations_via_chromatic, count_acyclic_orientations_brute,
    count_hamiltonian_paths_brute, count_phi_brute, make_complete_multipartite, part_sizes_up_to,
    OracleCaps,
};
use kpartite_ao::{
    ao_count, ao_count_bipartite_closed_form, build_hp_table, hp_feasible, BigCount, BlockTuple,
    Error, HpTable, PartSizes, Pivot,
};

use crate::report::{Check, CheckStatus};

const BIPARTITE_SWEEP: usize = 12;
const SWEEP_PARTS: usize = 4;
const PIVOT_SHAPES: [&[usize]; 2] = [&[6, 6, 6], &[4, 5, 6, 7]];

type Outcome = Result<bool, Error>;
/// `None` means the check does not apply to this input.
type Job<'a> = Box<dyn FnOnce() -> Option<Outcome> + Send + 'a>;

/// Runs every check on its own worker thread and returns them in a fixed
/// order. `cap` bounds the total vertex count of the oracle sweep; the
/// Hamiltonian-path sweep goes one vertex further.
pub(crate) fn run_checks(n: &PartSizes, value: &BigCount, cap: usize, budget: usize) -> Vec<Check> {
    let jobs: Vec<(String, Job<'_>)> = vec![
        (
            "input:closed-form".into(),
            Box::new(|| input_closed_form(n, value)),
        ),
        (
            "input:oracles".into(),
            Box::new(move || input_oracles(n, value, cap)),
        ),
        (
            "input:hamiltonian-paths".into(),
            Box::new(move || input_hp(n, cap + 1)),
        ),
        (
            "input:pivot-invariance".into(),
            Box::new(move || Some(pivot_invariant(n, budget))),
        ),
        (
            format!("sweep:bipartite(n1,n2<={BIPARTITE_SWEEP})"),
            Box::new(|| Some(bipartite_sweep())),
        ),
        (
            format!("sweep:oracles(total<={cap})"),
            Box::new(move || Some(oracle_sweep(cap))),
        ),
        (
            format!("sweep:hamiltonian-paths(total<={})", cap + 1),
            Box::new(move || Some(hp_sweep(cap + 1))),
        ),
        (
            "sweep:pivot-invariance".into(),
            Box::new(move || Some(pivot_sweep(budget))),
        ),
    ];

    thread::scope(|scope| {
        let handles: Vec<_> = jobs
            .into_iter()
            .map(|(name, job)| (name, scope.spawn(job)))
            .collect();
        handles
            .into_iter()
            .map(|(name, handle)| {
                let status = match handle.join() {
                    Ok(None) | Ok(Some(Err(Error::OracleCap { .. }))) => CheckStatus::Skipped,
                    Ok(Some(Ok(true))) => CheckStatus::Pass,
                    Ok(Some(_)) | Err(_) => CheckStatus::Fail,
                };
                Check { name, status }
            })
            .collect()
    })
}

fn input_closed_form(n: &PartSizes, value: &BigCount) -> Option<Outcome> {
    match *n.as_slice() {
        [a, b] => Some(Ok(ao_count_bipartite_closed_form(a, b) == *value)),
        _ => None,
    }
}

fn input_oracles(n: &PartSizes, value: &BigCount, cap: usize) -> Option<Outcome> {
    (n.total() <= cap).then(|| oracles_agree(n, value))
}

fn input_hp(n: &PartSizes, cap: usize) -> Option<Outcome> {
    (n.total() <= cap).then(|| hp_agrees(n))
}

fn oracles_agree(n: &PartSizes, value: &BigCount) -> Outcome {
    let caps = OracleCaps::default();
    let g = make_complete_multipartite(n, &caps)?;
    Ok(count_acyclic_orientations_brute(&g, &caps)? == *value
        && acyclic_orientations_via_chromatic(&g, &caps)? == *value
        && count_phi_brute(n, &caps)? == *value)
}

fn hp_agrees(n: &PartSizes) -> Outcome {
    let table = build_hp_table(n)?;
    let s = table
        .get(&BlockTuple::from(n.clone()))
        .cloned()
        .unwrap_or_default();
    let brute = count_hamiltonian_paths_brute(n, &OracleCaps::default())?;
    Ok(s == brute && hp_feasible(n.as_slice()) == (brute > BigCount::default()))
}

fn pivot_invariant(n: &PartSizes, budget: usize) -> Outcome {
    Ok(HpTable::build(n, Pivot::First, budget)? == HpTable::build(n, Pivot::Last, budget)?)
}

fn bipartite_sweep() -> Outcome {
    for a in 1..=BIPARTITE_SWEEP {
        for b in 1..=BIPARTITE_SWEEP {
            let n = PartSizes::new(vec![a, b])?;
            if ao_count(&n)? != ao_count_bipartite_closed_form(a, b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn oracle_sweep(cap: usize) -> Outcome {
    for n in part_sizes_up_to(cap, SWEEP_PARTS) {
        if !oracles_agree(&n, &ao_count(&n)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn hp_sweep(cap: usize) -> Outcome {
    for n in part_sizes_up_to(cap, SWEEP_PARTS) {
        if !hp_agrees(&n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn pivot_sweep(budget: usize) -> Outcome {
    for shape in PIVOT_SHAPES {
        if !pivot_invariant(&PartSizes::new(shape.to_vec())?, budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}
