use std::fs;
use std::process::ExitCode;

use clap::{Args, ValueEnum};
use serde_json::{json, Value};

use tesscover::clique_graph::clique_graph_with_cap;
use tesscover::coloring::{exact_chromatic_index, exact_chromatic_number};
use tesscover::constructions::{
    c1_add_star, c2_add_pendants, c3_gadget_replace, c4_fixed_t, c5_chordal21, c6_12graph, c7_nae_to_kg,
    c8_kg_to_graph, GadgetSpec,
};
use tesscover::graph::Graph;
use tesscover::io::{parse_nae, write_graph};

use crate::{read_graph, read_input, write_output, write_sidecar, Common, Failure, Outcome};

#[derive(Clone, Copy, ValueEnum)]
pub enum Kind {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
}

#[derive(Args)]
pub struct GenArgs {
    kind: Kind,
    /// c1: star size (defaults to the chromatic index of the input).
    #[arg(long)]
    chi_prime: Option<usize>,
    /// c2: vertex receiving pendants.
    #[arg(long, default_value_t = 0)]
    vertex: usize,
    /// c2: target clique count (defaults to the chromatic number of K(G)).
    #[arg(long)]
    chi_kg: Option<usize>,
    /// c4: comma-separated vertex set.
    #[arg(long, value_delimiter = ',')]
    f: Vec<usize>,
    /// c4: target tessellation number.
    #[arg(long, default_value_t = 4)]
    t: usize,
    /// c3: gadget description as JSON.
    #[arg(long)]
    gadget: Option<std::path::PathBuf>,
    /// Annotation path; defaults to `<output>.json`.
    #[arg(long)]
    sidecar: Option<std::path::PathBuf>,
}

fn exact<T>(r: tesscover::coloring::Exact<T>, what: &str) -> Result<T, Failure> {
    r.solved()
        .ok_or_else(|| Failure(format!("{what} not settled within the budget; pass it explicitly")))
}

/// `(role, count)` runs expanded into one label per vertex.
fn roles(runs: &[(&str, usize)]) -> Vec<String> {
    runs.iter()
        .flat_map(|&(r, k)| std::iter::repeat_n(r.to_string(), k))
        .collect()
}

pub fn run(c: &Common, a: GenArgs) -> Outcome {
    let (h, mut note): (Graph, Value) = match a.kind {
        Kind::C1 => {
            let g = read_graph(c)?;
            let k = match a.chi_prime {
                Some(k) => k,
                None => exact(exact_chromatic_index(&g, c.budget), "chromatic index")?.count,
            };
            let h = c1_add_star(&g, k)?;
            let r = roles(&[("base", g.n()), ("center", 1), ("leaf", k - 1)]);
            (h, json!({ "chi_prime": k, "roles": r }))
        }
        Kind::C2 => {
            let g = read_graph(c)?;
            let k = match a.chi_kg {
                Some(k) => k,
                None => {
                    let kg = clique_graph_with_cap(&g, c.clique_cap)?;
                    exact(exact_chromatic_number(&kg.kg, c.budget), "chromatic number of K(G)")?.count
                }
            };
            let h = c2_add_pendants(&g, a.vertex, k)?;
            let r = roles(&[("base", g.n()), ("pendant", h.n() - g.n())]);
            (h, json!({ "chi_kg": k, "vertex": a.vertex, "roles": r }))
        }
        Kind::C3 => {
            let g = read_graph(c)?;
            let path = a.gadget.as_ref().ok_or_else(|| Failure("c3 needs --gadget <spec.json>".into()))?;
            let spec: GadgetSpec = serde_json::from_str(&fs::read_to_string(path)?)?;
            let h = c3_gadget_replace(&g, &spec)?;
            (h, json!({ "copies": g.n(), "gadget_order": spec.graph.n() }))
        }
        Kind::C4 => {
            let g = read_graph(c)?;
            let h = c4_fixed_t(&g, &a.f, a.t)?;
            let mut f = a.f.clone();
            f.sort_unstable();
            f.dedup();
            let k = f.len();
            let hubs = 3 + k * (a.t - 3);
            let r = roles(&[
                ("base", g.n()),
                ("u", k),
                ("c", 3),
                ("w", k * (a.t - 3)),
                ("pendant", hubs * (a.t - 1)),
            ]);
            (h, json!({ "t": a.t, "f": f, "roles": r }))
        }
        Kind::C5 | Kind::C6 => {
            let g = read_graph(c)?;
            let (n, m) = (g.n(), g.m());
            let (h, part, r) = if matches!(a.kind, Kind::C5) {
                let (h, p) = c5_chordal21(&g)?;
                let r = roles(&[("vertex", n), ("edge", m), ("apex", 1), ("pendant", 3 * n + 3)]);
                (h, p, r)
            } else {
                let (h, p) = c6_12graph(&g)?;
                let r = roles(&[
                    ("vertex", n),
                    ("edge", m),
                    ("apex", 1),
                    ("pendant", 2 * n + 3),
                    ("second_apex", 1),
                    ("pendant", 3),
                ]);
                (h, p, r)
            };
            (h, json!({ "partition": part, "roles": r }))
        }
        Kind::C7 | Kind::C8 => {
            let inst = parse_nae(&read_input(c)?)?;
            let (n, k) = (inst.var_count, inst.clauses.len());
            if matches!(a.kind, Kind::C7) {
                let h = c7_nae_to_kg(&inst);
                let mut r: Vec<String> = (0..n).flat_map(|v| [format!("x{}", v + 1), format!("-x{}", v + 1)]).collect();
                r.push("apex".into());
                r.extend((0..k).flat_map(|j| (0..3).map(move |p| format!("clause{}.{p}", j + 1))));
                (h, json!({ "roles": r }))
            } else {
                let h = c8_kg_to_graph(&inst)?;
                let mut r: Vec<String> = (0..n).map(|v| format!("x{}", v + 1)).collect();
                for j in 0..k {
                    r.push(format!("clause{}", j + 1));
                    r.extend((0..3).map(|p| format!("clause{}.{p}", j + 1)));
                }
                (h, json!({ "roles": r }))
            }
        }
    };
    note["construction"] = json!(a.kind.to_possible_value().unwrap().get_name());
    note["n"] = json!(h.n());
    note["m"] = json!(h.m());
    write_output(c.output.as_deref(), &write_graph(&h))?;
    write_sidecar(c, a.sidecar.as_deref(), &note)?;
    Ok(ExitCode::SUCCESS)
}
