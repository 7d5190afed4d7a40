use std::io::Write;
use std::process::{Command, Output, Stdio};

use planar_cages::bounds::CageParams;
use planar_cages::families::{family_i, FamilySpec};
use planar_cages::graph::{encode_graph6, parse_graph_text};
use planar_cages::verify::certify;

fn pcage(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pcage")).args(args).output().unwrap()
}

fn pcage_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pcage"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("pcage-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

type Seg = ((f64, f64), (f64, f64));

fn attr(line: &str, key: &str) -> f64 {
    let start = line.find(&format!(" {key}=\"")).unwrap() + key.len() + 3;
    let end = start + line[start..].find('"').unwrap();
    line[start..end].parse().unwrap()
}

fn svg_segments(svg: &str) -> Vec<Seg> {
    svg.lines()
        .filter(|l| l.starts_with("<line"))
        .map(|l| ((attr(l, "x1"), attr(l, "y1")), (attr(l, "x2"), attr(l, "y2"))))
        .collect()
}

fn orient(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> f64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

/// Proper crossings between segments with no common endpoint.
fn crossings(segs: &[Seg]) -> usize {
    let opposite = |x: f64, y: f64| (x > 1e-9 && y < -1e-9) || (x < -1e-9 && y > 1e-9);
    let mut count = 0;
    for (i, &(p, q)) in segs.iter().enumerate() {
        for &(r, s) in &segs[i + 1..] {
            if [r, s].contains(&p) || [r, s].contains(&q) {
                continue;
            }
            if opposite(orient(p, q, r), orient(p, q, s)) && opposite(orient(r, s, p), orient(r, s, q)) {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn construct_formats() {
    let o = pcage(&["construct", "I", "6", "--format", "graph6"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), encode_graph6(&family_i(6).unwrap()).unwrap());
    let dot = stdout(&pcage(&["construct", "platonic", "dodecahedron", "--format", "dot"]));
    assert_eq!(dot.lines().filter(|l| l.contains("--")).count(), 30);
    assert_eq!(dot.lines().filter(|l| l.trim().ends_with(';') && !l.contains("--")).count(), 20);
    let el = stdout(&pcage(&["construct", "O", "4", "6", "--format", "edgelist"]));
    assert_eq!(el.lines().next(), Some("10"));
    assert_eq!(pcage(&["construct", "I", "2"]).status.code(), Some(2));
    assert_eq!(pcage(&["construct", "nosuch", "3"]).status.code(), Some(2));
}

#[test]
fn constructed_graphs_reparse_and_certify() {
    let cases = [("I", vec!["7"], (5, 7, 3)), ("D", vec!["6"], (3, 6, 4))];
    for (tag, params, cp) in cases {
        for format in ["graph6", "edgelist"] {
            let mut args = vec!["construct", tag];
            args.extend(params.iter().copied());
            args.extend(["--format", format]);
            let text = stdout(&pcage(&args));
            let g = parse_graph_text(&text).unwrap();
            let cert = certify(&g, CageParams::biregular(cp.0, cp.1, cp.2).unwrap());
            assert!(!cert.status.is_violation(), "{tag}: {cert}");
        }
    }
}

#[test]
fn bounds_and_tables() {
    let o = pcage(&["bounds", "5", "9", "3"]);
    let text = stdout(&o);
    assert!(o.status.success());
    assert!(text.contains("lower: 16") && text.contains("upper: 20"), "{text}");
    let o = pcage(&["bounds", "4", "5", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("infeasible"));
    let o = pcage(&["table", "6"]);
    assert!(o.status.success());
    assert!(!stdout(&o).contains("MISMATCH"));
    assert_eq!(pcage(&["table", "9"]).status.code(), Some(2));
}

#[test]
fn check_exit_codes() {
    let i6 = temp_file("I6.g6", &stdout(&pcage(&["construct", "I", "6"])));
    let o = pcage(&["check", i6.to_str().unwrap(), "5", "6", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("status: meets_exact_cage_order"));
    let c5 = temp_file("C5.txt", "5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    let o = pcage(&["check", c5.to_str().unwrap(), "2", "3", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("violates(degree profile)"));
    let bad = temp_file("malformed.g6", "zz!!\n");
    assert_eq!(pcage(&["check", bad.to_str().unwrap(), "2", "3", "5"]).status.code(), Some(2));
    let o = pcage_stdin(&["check", "-", "5", "6", "3"], &std::fs::read_to_string(&i6).unwrap());
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn search_examples() {
    let o = pcage(&["search", "5", "6", "3", "--n", "13"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("0 graphs, exhaustive"));
    let o = pcage(&["search", "3", "4", "4", "--max-n", "10"]);
    let text = stdout(&o);
    let d4 = encode_graph6(&planar_cages::families::family_d(4).unwrap()).unwrap();
    let found: Vec<_> = text.lines().filter_map(|l| parse_graph_text(l).ok()).collect();
    assert!(text.contains("result: n=10"), "{text}");
    let want = planar_cages::graph::canonical_form(&parse_graph_text(&d4).unwrap());
    assert!(found.iter().any(|g| planar_cages::graph::canonical_form(g) == want));
    assert_eq!(pcage(&["search", "5", "6", "3"]).status.code(), Some(2));
}

#[test]
fn search_checkpoint_resumes() {
    let dir = std::env::temp_dir().join(format!("pcage-ckpt-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let ck = dir.join("run.ckpt");
    let _ = std::fs::remove_file(&ck);
    let args = ["search", "4", "8", "3", "--n", "10", "--checkpoint", ck.to_str().unwrap()];
    let first = pcage(&args);
    let second = pcage(&args);
    assert!(first.status.success() && second.status.success());
    assert_eq!(first.stdout, second.stdout);
    std::fs::write(&ck, "garbage\n").unwrap();
    assert_eq!(pcage(&args).status.code(), Some(2));
}

#[test]
fn drawings_have_no_crossings() {
    let ico = stdout(&pcage(&["draw", "platonic", "icosahedron"]));
    assert_eq!(ico.lines().filter(|l| l.starts_with("<circle")).count(), 12);
    let segs = svg_segments(&ico);
    assert_eq!(segs.len(), 30);
    assert_eq!(crossings(&segs), 0);
    let d5 = stdout(&pcage(&["draw", "family", "D", "5"]));
    assert_eq!(crossings(&svg_segments(&d5)), 0);
    assert_eq!(d5, stdout(&pcage(&["draw", "family", "D", "5"])));
    let k5 = temp_file("K5.txt", "5\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    assert_eq!(pcage(&["draw", k5.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn every_family_draws_cleanly() {
    for spec in FamilySpec::catalog() {
        let text = spec.to_string();
        let mut args = vec!["construct"];
        args.extend(text.split(' '));
        args.extend(["--format", "svg"]);
        let o = pcage(&args);
        assert!(o.status.success(), "{text}");
        assert_eq!(crossings(&svg_segments(&stdout(&o))), 0, "{text}");
    }
}
