//! 3-SAT instances, DIMACS input, and the variable-path / clause-clique gadget.
//!
//! Each variable `u_i` becomes a path `x_i - y_i - u_i - u_i' - w_i - z_i`;
//! each clause becomes a vertex `c_j` joined to the vertices of its three
//! literals (`u_i` for a positive literal, `u_i'` for a negated one); the
//! clause vertices form a clique, and an apex `v` is joined to all of them.

use std::fmt;
use std::ops::ControlFlow;

use serde::Serialize;
use thiserror::Error;

use crate::domination::{Oracle, OracleError};
use crate::graph::Graph;
use crate::sets::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CnfError {
    #[error("clause {clause} has {arity} literals, expected 3")]
    ArityNot3 { clause: usize, arity: usize },
    #[error("clause {clause} repeats variable {variable}")]
    RepeatedVariable { clause: usize, variable: usize },
    #[error("clause {clause} contains variable {variable} and its negation")]
    ComplementaryPair { clause: usize, variable: usize },
    #[error("clause {clause} mentions variable {variable} but only {count} are declared")]
    VariableOutOfRange {
        clause: usize,
        variable: usize,
        count: usize,
    },
    #[error("instance has no clauses")]
    NoClauses,
    #[error("line {line}: {reason}")]
    Dimacs { line: usize, reason: String },
    #[error("header declares {declared} clauses but {found} were read")]
    ClauseCountMismatch { declared: usize, found: usize },
}

/// Literal over a 0-based variable index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Literal {
    pub variable: usize,
    pub negated: bool,
}

impl Literal {
    pub fn positive(variable: usize) -> Self {
        Literal {
            variable,
            negated: false,
        }
    }

    pub fn negative(variable: usize) -> Self {
        Literal {
            variable,
            negated: true,
        }
    }

    /// DIMACS convention: `k` is variable `k - 1`, `-k` its negation.
    pub fn from_dimacs(code: i64) -> Option<Self> {
        if code == 0 {
            return None;
        }
        let variable = usize::try_from(code.unsigned_abs() - 1).ok()?;
        Some(Literal {
            variable,
            negated: code < 0,
        })
    }

    pub fn is_true_under(&self, assignment: &[bool]) -> bool {
        assignment[self.variable] != self.negated
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}u{}",
            if self.negated { "¬" } else { "" },
            self.variable + 1
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CnfInstance {
    variable_count: usize,
    clauses: Vec<[Literal; 3]>,
}

impl CnfInstance {
    /// Validates arity, variable range, and per-clause distinctness.
    pub fn new(variable_count: usize, clauses: Vec<Vec<Literal>>) -> Result<Self, CnfError> {
        if clauses.is_empty() {
            return Err(CnfError::NoClauses);
        }
        let mut out = Vec::with_capacity(clauses.len());
        for (j, clause) in clauses.into_iter().enumerate() {
            let clause_no = j + 1;
            let lits: [Literal; 3] =
                clause
                    .as_slice()
                    .try_into()
                    .map_err(|_| CnfError::ArityNot3 {
                        clause: clause_no,
                        arity: clause.len(),
                    })?;
            for lit in &lits {
                if lit.variable >= variable_count {
                    return Err(CnfError::VariableOutOfRange {
                        clause: clause_no,
                        variable: lit.variable + 1,
                        count: variable_count,
                    });
                }
            }
            for a in 0..3 {
                for b in a + 1..3 {
                    if lits[a].variable == lits[b].variable {
                        let variable = lits[a].variable + 1;
                        return Err(if lits[a].negated != lits[b].negated {
                            CnfError::ComplementaryPair {
                                clause: clause_no,
                                variable,
                            }
                        } else {
                            CnfError::RepeatedVariable {
                                clause: clause_no,
                                variable,
                            }
                        });
                    }
                }
            }
            out.push(lits);
        }
        Ok(CnfInstance {
            variable_count,
            clauses: out,
        })
    }

    /// Builds from DIMACS-style signed literals (`3` = u3, `-3` = ¬u3).
    pub fn from_signed(variable_count: usize, clauses: &[[i64; 3]]) -> Result<Self, CnfError> {
        let mut converted = Vec::with_capacity(clauses.len());
        for (j, c) in clauses.iter().enumerate() {
            let lits = c
                .iter()
                .map(|&code| Literal::from_dimacs(code))
                .collect::<Option<Vec<_>>>()
                .ok_or(CnfError::Dimacs {
                    line: 0,
                    reason: format!("clause {} contains literal 0", j + 1),
                })?;
            converted.push(lits);
        }
        Self::new(variable_count, converted)
    }

    /// Parses DIMACS CNF: `c` comment lines, one `p cnf <vars> <clauses>`
    /// header, then clauses as whitespace-separated literals closed by `0`.
    pub fn parse_dimacs(text: &str) -> Result<Self, CnfError> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses: Vec<Vec<Literal>> = Vec::new();
        let mut current: Vec<Literal> = Vec::new();
        let mut last_line = 0;

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            last_line = line;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('c') {
                continue;
            }
            if trimmed.starts_with('%') {
                break;
            }
            if trimmed.starts_with('p') {
                if header.is_some() {
                    return Err(CnfError::Dimacs {
                        line,
                        reason: "second problem line".into(),
                    });
                }
                let parts: Vec<&str> = trimmed.split_whitespace().collect();
                let parsed = match parts.as_slice() {
                    ["p", "cnf", v, c] => v.parse().ok().zip(c.parse().ok()),
                    _ => None,
                };
                header = Some(parsed.ok_or_else(|| CnfError::Dimacs {
                    line,
                    reason: "expected `p cnf <variables> <clauses>`".into(),
                })?);
                continue;
            }
            let Some((vars, _)) = header else {
                return Err(CnfError::Dimacs {
                    line,
                    reason: "clause before problem line".into(),
                });
            };
            for token in trimmed.split_whitespace() {
                let code: i64 = token.parse().map_err(|_| CnfError::Dimacs {
                    line,
                    reason: format!("`{token}` is not an integer literal"),
                })?;
                match Literal::from_dimacs(code) {
                    None => clauses.push(std::mem::take(&mut current)),
                    Some(lit) if lit.variable >= vars => {
                        return Err(CnfError::VariableOutOfRange {
                            clause: clauses.len() + 1,
                            variable: lit.variable + 1,
                            count: vars,
                        })
                    }
                    Some(lit) => current.push(lit),
                }
            }
        }
        let Some((vars, declared)) = header else {
            return Err(CnfError::Dimacs {
                line: last_line.max(1),
                reason: "missing problem line".into(),
            });
        };
        if !current.is_empty() {
            return Err(CnfError::Dimacs {
                line: last_line,
                reason: "last clause is not terminated by 0".into(),
            });
        }
        if clauses.len() != declared {
            return Err(CnfError::ClauseCountMismatch {
                declared,
                found: clauses.len(),
            });
        }
        Self::new(vars, clauses)
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assert_eq!(assignment.len(), self.variable_count);
        self.clauses
            .iter()
            .all(|c| c.iter().any(|l| l.is_true_under(assignment)))
    }

    /// First satisfying assignment in truth-table order (variable 1 is the
    /// most significant bit, `false` before `true`).
    pub fn brute_force_satisfying_assignment(&self) -> Option<Vec<bool>> {
        let n = self.variable_count;
        assert!(n < 32, "truth-table search limited to 31 variables");
        (0u64..1 << n)
            .map(|bits| {
                (0..n)
                    .map(|i| bits >> (n - 1 - i) & 1 == 1)
                    .collect::<Vec<bool>>()
            })
            .find(|a| self.is_satisfied_by(a))
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.variable_count, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                let code = l.variable as i64 + 1;
                out.push_str(&format!("{} ", if l.negated { -code } else { code }));
            }
            out.push_str("0\n");
        }
        out
    }
}

/// Vertex ids of one variable path `x - y - u - u' - w - z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VariableGadget {
    pub x: usize,
    pub y: usize,
    pub u: usize,
    pub u_neg: usize,
    pub w: usize,
    pub z: usize,
}

impl VariableGadget {
    pub fn vertices(&self) -> [usize; 6] {
        [self.x, self.y, self.u, self.u_neg, self.w, self.z]
    }

    pub fn literal_vertex(&self, negated: bool) -> usize {
        if negated {
            self.u_neg
        } else {
            self.u
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SatReductionMap {
    #[serde(skip)]
    pub graph: Graph,
    pub variables: Vec<VariableGadget>,
    pub clause_vertices: Vec<usize>,
    pub apex: usize,
}

impl SatReductionMap {
    /// All variable-path vertices.
    pub fn path_vertices(&self) -> VertexSet {
        VertexSet::from_members(
            self.graph.vertex_count(),
            self.variables.iter().flat_map(|g| g.vertices()),
        )
    }

    /// Assignment read off a vertex set: `u_i` selected means true, otherwise
    /// false. `None` when some variable has both literal vertices selected.
    pub fn assignment_from(&self, set: &VertexSet) -> Option<Vec<bool>> {
        self.variables
            .iter()
            .map(|g| match (set.contains(g.u), set.contains(g.u_neg)) {
                (true, true) => None,
                (pos, _) => Some(pos),
            })
            .collect()
    }

    /// Vertex set selecting, per variable, `{u_i, z_i}` when true and
    /// `{u_i', x_i}` when false.
    pub fn set_for_assignment(&self, assignment: &[bool]) -> VertexSet {
        let mut set = VertexSet::new(self.graph.vertex_count());
        for (g, &value) in self.variables.iter().zip(assignment) {
            if value {
                set.insert(g.u);
                set.insert(g.z);
            } else {
                set.insert(g.u_neg);
                set.insert(g.x);
            }
        }
        set
    }
}

/// Builds the gadget graph. Vertex ids: the six path vertices of variable
/// `i` are `6i..6i+6` in path order, then one vertex per clause, then the apex.
pub fn sat_to_graph(f: &CnfInstance) -> SatReductionMap {
    let n = f.variable_count;
    let m = f.clauses.len();
    let variables: Vec<VariableGadget> = (0..n)
        .map(|i| {
            let b = 6 * i;
            VariableGadget {
                x: b,
                y: b + 1,
                u: b + 2,
                u_neg: b + 3,
                w: b + 4,
                z: b + 5,
            }
        })
        .collect();
    let clause_vertices: Vec<usize> = (6 * n..6 * n + m).collect();
    let apex = 6 * n + m;

    let mut edges = Vec::with_capacity(5 * n + 3 * m + m * (m - 1) / 2 + m);
    for g in &variables {
        let p = g.vertices();
        edges.extend(p.windows(2).map(|w| (w[0], w[1])));
    }
    for (clause, &c) in f.clauses.iter().zip(&clause_vertices) {
        for lit in clause {
            edges.push((variables[lit.variable].literal_vertex(lit.negated), c));
        }
    }
    for (a, &ca) in clause_vertices.iter().enumerate() {
        for &cb in &clause_vertices[a + 1..] {
            edges.push((ca, cb));
        }
        edges.push((ca, apex));
    }
    let graph = Graph::from_edges(apex + 1, edges).expect("gadget is a simple graph");
    SatReductionMap {
        graph,
        variables,
        clause_vertices,
        apex,
    }
}

/// True iff the gadget has a ve-dominating set of exactly `2n` vertices,
/// searched among the variable-path vertices.
///
/// Note that selecting both `u_i` and `u_i'` on every path always gives such
/// a set, so this holds for every instance, satisfiable or not; see
/// [`satisfying_assignment_via_graph`] for the search that tracks
/// satisfiability.
pub fn sat_decide_via_graph(f: &CnfInstance, oracle: &Oracle) -> Result<bool, OracleError> {
    let map = sat_to_graph(f);
    let k = 2 * f.variable_count;
    Ok(oracle
        .find_ve_dominating_set(&map.graph, k, &map.path_vertices())?
        .is_some())
}

/// Searches size-`2n` ve-dominating sets of the gadget (among path vertices)
/// that pick at most one literal vertex per variable, and returns the
/// assignment read off the first one. Such a set exists iff `f` is satisfiable.
pub fn satisfying_assignment_via_graph(
    f: &CnfInstance,
    oracle: &Oracle,
) -> Result<Option<Vec<bool>>, OracleError> {
    let map = sat_to_graph(f);
    let k = 2 * f.variable_count;
    let mut found = None;
    oracle.for_each_ve_dominating_set(&map.graph, k, &map.path_vertices(), |set| {
        match map.assignment_from(set) {
            Some(a) if f.is_satisfied_by(&a) => {
                found = Some(a);
                ControlFlow::Break(())
            }
            _ => ControlFlow::Continue(()),
        }
    })?;
    Ok(found)
}
