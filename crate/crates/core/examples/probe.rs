use std::time::{Duration, Instant};
use veto_core::families::*;
use veto_core::model::{Flavor, FlavorSet};
use veto_core::recognize::*;
use veto_core::{Q, SemanticsTag};

fn main() {
    let which = std::env::args().nth(1).unwrap_or_default();
    let secs: u64 = std::env::args().nth(2).map(|s| s.parse().unwrap()).unwrap_or(60);
    let cfg = RecognizeConfig {
        time_limit: Some(Duration::from_secs(secs)),
        ..RecognizeConfig::default()
    };
    let muvi = FlavorSet::of(&[Flavor::Unit, Flavor::Midpoint]);
    let t = Instant::now();
    match which.as_str() {
        "lobster" => {
            let r = recognize::<Q>(&lobster5(), SemanticsTag::Veto, muvi, &cfg).unwrap();
            eprintln!("lobster5 MUVI: {:?} nodes={} in {:?}", r.verdict, r.stats.nodes, t.elapsed());
        }
        "k222" => {
            let r = recognize::<Q>(&complete_multipartite(&[2, 2, 2]), SemanticsTag::DoubleApproval, FlavorSet::EMPTY, &cfg).unwrap();
            eprintln!("K222 DA: {:?} nodes={} in {:?}", r.verdict, r.stats.nodes, t.elapsed());
        }
        "k122" => {
            let r = recognize::<Q>(&complete_multipartite(&[1, 2, 2]), SemanticsTag::DoubleApproval, FlavorSet::EMPTY, &cfg).unwrap();
            eprintln!("K122 DA: {:?} nodes={} in {:?}", r.verdict, r.stats.nodes, t.elapsed());
        }
        "k6" => {
            let r = recognize::<Q>(&complete_graph(6), SemanticsTag::Veto, FlavorSet::EMPTY, &cfg).unwrap();
            eprintln!("K6 veto: {:?} nodes={} in {:?}", r.verdict, r.stats.nodes, t.elapsed());
        }
        "orient" => {
            let rep = orientation_feasible(&grotzsch(), DEFAULT_EDGE_CAP).unwrap();
            eprintln!("grotzsch orient: feasible={} in {:?}", rep.feasible, t.elapsed());
        }
        "cat10" => {
            let g = caterpillar_graph(&[1, 1, 1, 1, 1]).unwrap();
            let r = recognize::<Q>(&g, SemanticsTag::Veto, muvi, &cfg).unwrap();
            eprintln!("caterpillar10 MUVI: {:?} nodes={} in {:?}", r.verdict, r.stats.nodes, t.elapsed());
        }
        "gminusk" => {
            let g = grotzsch().delete_vertex(10);
            let r = recognize::<Q>(&g, SemanticsTag::Veto, FlavorSet::EMPTY, &cfg).unwrap();
            eprintln!("grotzsch-k veto: {:?} nodes={} in {:?}", r.verdict, r.stats.nodes, t.elapsed());
        }
        "gminusi" => {
            let g = grotzsch().delete_vertex(8);
            let r = recognize::<Q>(&g, SemanticsTag::Veto, FlavorSet::EMPTY, &cfg).unwrap();
            eprintln!("grotzsch-i veto: {:?} nodes={} in {:?}", r.verdict, r.stats.nodes, t.elapsed());
        }
        "gminusa" => {
            let g = grotzsch().delete_vertex(0);
            let r = recognize::<Q>(&g, SemanticsTag::Veto, FlavorSet::EMPTY, &cfg).unwrap();
            eprintln!("grotzsch-a veto: {:?} nodes={} in {:?}", r.verdict, r.stats.nodes, t.elapsed());
        }
        "grotzschfull" => {
            let r = recognize::<Q>(&grotzsch(), SemanticsTag::Veto, FlavorSet::EMPTY, &cfg).unwrap();
            eprintln!("grotzsch veto: {:?} nodes={} in {:?}", r.verdict, r.stats.nodes, t.elapsed());
        }
        other => eprintln!("unknown probe {other}"),
    }
}
// appended probes run via the "extra" argument
