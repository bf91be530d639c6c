//! Plot-ready description of the tetrahedron/octahedron picture.

use serde::Serialize;

use super::format::{nums, sig17, Num};
use crate::bd::{classify, ppt_conditions, positivity_conditions, BdState, OCTA_VERTICES, TETRA_VERTICES};
use crate::measures::robustness;

pub const CSV_HEADER: [&str; 4] = ["label", "x", "y", "z"];

#[derive(Debug, Clone, PartialEq)]
pub struct LabeledPoint {
    pub label: String,
    pub xyz: [f64; 3],
}

/// Half-space `constant + normal·x ≥ 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct FacePlane {
    pub label: String,
    pub constant: f64,
    pub normal: [f64; 3],
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeometryBundle {
    pub tetra_vertices: Vec<LabeledPoint>,
    pub octa_vertices: Vec<LabeledPoint>,
    pub state_point: Option<[f64; 3]>,
    pub t_prime: Option<[f64; 3]>,
    pub t_double_prime: Option<[f64; 3]>,
    /// Four positivity faces then four partial-transpose faces.
    pub face_planes: Vec<FacePlane>,
}

fn linear_form(f: impl Fn(&[f64; 3]) -> [f64; 4], slot: usize) -> FacePlane {
    let constant = f(&[0.0; 3])[slot];
    let normal = std::array::from_fn(|i| {
        let mut e = [0.0; 3];
        e[i] = 1.0;
        f(&e)[slot] - constant
    });
    FacePlane { label: String::new(), constant, normal }
}

impl GeometryBundle {
    pub fn new(state: Option<&BdState<f64>>) -> Self {
        let tetra_vertices = TETRA_VERTICES
            .iter()
            .enumerate()
            .map(|(k, v)| LabeledPoint { label: format!("P{}", k + 1), xyz: *v })
            .collect();
        let octa_vertices = OCTA_VERTICES
            .iter()
            .enumerate()
            .map(|(i, v)| LabeledPoint {
                label: format!("O{}{}", i / 2 + 1, if i % 2 == 0 { '+' } else { '-' }),
                xyz: *v,
            })
            .collect();
        let mut face_planes = Vec::with_capacity(8);
        for slot in 0..4 {
            let mut p = linear_form(positivity_conditions::<f64>, slot);
            p.label = format!("T1_{}", slot + 1);
            face_planes.push(p);
        }
        for slot in 0..4 {
            let mut p = linear_form(ppt_conditions::<f64>, slot);
            p.label = format!("T2_{}", slot + 1);
            face_planes.push(p);
        }

        let (mut state_point, mut t_prime, mut t_double_prime) = (None, None, None);
        if let Some(s) = state {
            state_point = Some(s.t());
            if classify(s).is_entangled() {
                let cert = robustness(s);
                t_prime = Some(cert.t_prime.components());
                t_double_prime = Some(cert.t_double_prime.components());
            }
        }
        Self { tetra_vertices, octa_vertices, state_point, t_prime, t_double_prime, face_planes }
    }

    /// Every point in emission order: tetrahedron, octahedron, then the
    /// state segment `t`, `t_prime`, `t_double_prime` when present.
    pub fn points(&self) -> Vec<LabeledPoint> {
        let mut out: Vec<LabeledPoint> = self.tetra_vertices.iter().chain(&self.octa_vertices).cloned().collect();
        for (label, p) in [("t", self.state_point), ("t_prime", self.t_prime), ("t_double_prime", self.t_double_prime)] {
            if let Some(xyz) = p {
                out.push(LabeledPoint { label: label.into(), xyz });
            }
        }
        out
    }

    /// CSV with header `label,x,y,z`, one point per row. Face planes are not
    /// points and appear only in the JSON form.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_HEADER).expect("in-memory write");
        for p in self.points() {
            let [x, y, z] = p.xyz.map(sig17);
            w.write_record([p.label.as_str(), &x, &y, &z]).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Point<'a> {
            label: &'a str,
            x: Num,
            y: Num,
            z: Num,
        }
        #[derive(Serialize)]
        struct Plane<'a> {
            label: &'a str,
            constant: Num,
            normal: [Num; 3],
        }
        #[derive(Serialize)]
        struct StateBlock {
            t: [Num; 3],
            t_prime: Option<[Num; 3]>,
            t_double_prime: Option<[Num; 3]>,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            tetra_vertices: Vec<Point<'a>>,
            octa_vertices: Vec<Point<'a>>,
            face_planes: Vec<Plane<'a>>,
            state: Option<StateBlock>,
        }
        fn point(p: &LabeledPoint) -> Point<'_> {
            Point { label: &p.label, x: Num(p.xyz[0]), y: Num(p.xyz[1]), z: Num(p.xyz[2]) }
        }
        let doc = Doc {
            tetra_vertices: self.tetra_vertices.iter().map(point).collect(),
            octa_vertices: self.octa_vertices.iter().map(point).collect(),
            face_planes: self
                .face_planes
                .iter()
                .map(|f| Plane { label: &f.label, constant: Num(f.constant), normal: nums(f.normal) })
                .collect(),
            state: self.state_point.map(|t| StateBlock {
                t: nums(t),
                t_prime: self.t_prime.map(nums),
                t_double_prime: self.t_double_prime.map(nums),
            }),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
        s.push('\n');
        s
    }
}
