//! JSON forms of the public value types.
//!
//! Conventions: partitions are arrays of integers, all big integers print
//! as decimal strings so consumers never overflow, Laurent polynomials are
//! `[exponent, "coefficient"]` pairs sorted by exponent, and ring elements
//! sort their keys lexicographically.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::betti::BettiReport;
use crate::error::{Error, Result};
use crate::kring::KClass;
use crate::laurent::{CurveContext, LaurentPoly};
use crate::partition::Partition;
use crate::repring::{ComparisonReport, Group, RepElement};

pub fn partition_to_json(p: &Partition) -> Value {
    Value::Array(p.parts().iter().map(|&x| json!(x)).collect())
}

pub fn partition_from_json(v: &Value) -> Result<Partition> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Json("partition must be an array".into()))?;
    let mut parts = Vec::with_capacity(arr.len());
    for x in arr {
        let n = x
            .as_u64()
            .ok_or_else(|| Error::Json(format!("bad partition entry {}", x)))?;
        parts.push(u32::try_from(n).map_err(|_| Error::Json("part too large".into()))?);
    }
    Partition::new(parts).map_err(|e| Error::Json(e.to_string()))
}

pub fn laurent_to_json(p: &LaurentPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(k, c)| json!([k, c.to_string()]))
            .collect(),
    )
}

pub fn laurent_from_json(v: &Value) -> Result<LaurentPoly> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Json("laurent polynomial must be an array".into()))?;
    let mut terms = Vec::with_capacity(arr.len());
    for pair in arr {
        let pair = pair
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| Error::Json("term must be an [exponent, coeff] pair".into()))?;
        let k = pair[0]
            .as_i64()
            .ok_or_else(|| Error::Json("bad exponent".into()))?;
        let c: BigInt = pair[1]
            .as_str()
            .ok_or_else(|| Error::Json("coefficient must be a decimal string".into()))?
            .parse()
            .map_err(|_| Error::Json("bad coefficient".into()))?;
        terms.push((k, c));
    }
    Ok(LaurentPoly::from_terms(terms))
}

pub fn kclass_to_json(k: &KClass) -> Value {
    let terms: Vec<Value> = k
        .terms()
        .iter()
        .map(|(p, c)| {
            json!({
                "partition": partition_to_json(p),
                "coeff": laurent_to_json(c),
            })
        })
        .collect();
    json!({
        "g": k.ctx().genus(),
        "hyperelliptic": k.ctx().is_hyperelliptic(),
        "terms": terms,
    })
}

pub fn kclass_from_json(v: &Value) -> Result<KClass> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Json("class must be an object".into()))?;
    let g = obj
        .get("g")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Json("missing genus".into()))?;
    let hyper = obj
        .get("hyperelliptic")
        .and_then(Value::as_bool)
        .ok_or_else(|| Error::Json("missing hyperelliptic flag".into()))?;
    let ctx = CurveContext::new(g as u32, hyper)?;
    let mut class = KClass::zero(ctx);
    let terms = obj
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("missing terms".into()))?;
    for t in terms {
        let part = partition_from_json(
            t.get("partition")
                .ok_or_else(|| Error::Json("term without partition".into()))?,
        )?;
        let coeff = laurent_from_json(
            t.get("coeff")
                .ok_or_else(|| Error::Json("term without coefficient".into()))?,
        )?;
        class = class.add(&KClass::of(&part, ctx).scaled(&coeff))?;
    }
    Ok(class)
}

pub fn betti_report_to_json(r: &BettiReport) -> Value {
    json!({
        "partition": partition_to_json(&r.gamma),
        "g": r.ctx.genus(),
        "h": laurent_to_json(&r.h),
        "P": laurent_to_json(&r.p_constant),
        "h_perverse": laurent_to_json(&r.h_perverse),
        "euler": r.euler.to_string(),
    })
}

pub fn betti_report_from_json(v: &Value) -> Result<BettiReport> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Json("report must be an object".into()))?;
    let field = |name: &str| -> Result<&Value> {
        obj.get(name)
            .ok_or_else(|| Error::Json(format!("missing field {}", name)))
    };
    let g = field("g")?
        .as_u64()
        .ok_or_else(|| Error::Json("bad genus".into()))?;
    Ok(BettiReport {
        gamma: partition_from_json(field("partition")?)?,
        ctx: CurveContext::new(g as u32, false)?,
        h: laurent_from_json(field("h")?)?,
        p_constant: laurent_from_json(field("P")?)?,
        h_perverse: laurent_from_json(field("h_perverse")?)?,
        euler: field("euler")?
            .as_str()
            .ok_or_else(|| Error::Json("euler must be a string".into()))?
            .parse()
            .map_err(|_| Error::Json("bad euler value".into()))?,
    })
}

pub fn rep_element_to_json(r: &RepElement) -> Value {
    let terms: Vec<Value> = r
        .terms()
        .iter()
        .map(|(label, &mult)| {
            json!({
                "label": partition_to_json(label),
                "mult": mult,
            })
        })
        .collect();
    json!({
        "group": r.group().name(),
        "rank": r.group().rank(),
        "terms": terms,
    })
}

pub fn rep_element_from_json(v: &Value) -> Result<RepElement> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Json("element must be an object".into()))?;
    let rank = obj
        .get("rank")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Json("missing rank".into()))? as u32;
    let group = match obj.get("group").and_then(Value::as_str) {
        Some("SL") => Group::Sl { n: rank },
        Some("Sp") => Group::Sp { m: rank },
        _ => return Err(Error::Json("group must be \"SL\" or \"Sp\"".into())),
    };
    let mut out = RepElement::zero(group);
    let terms = obj
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("missing terms".into()))?;
    for t in terms {
        let label = partition_from_json(
            t.get("label")
                .ok_or_else(|| Error::Json("term without label".into()))?,
        )?;
        let mult = t
            .get("mult")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Json("term without multiplicity".into()))?;
        out.insert(label, mult);
    }
    Ok(out)
}

pub fn comparison_to_json(r: &ComparisonReport) -> Value {
    let mut obj = Map::new();
    obj.insert("alpha".into(), partition_to_json(&r.alpha));
    obj.insert("beta".into(), partition_to_json(&r.beta));
    obj.insert("g".into(), json!(r.ctx.genus()));
    obj.insert(
        "hyperelliptic".into(),
        json!(r.ctx.is_hyperelliptic()),
    );
    obj.insert("left".into(), rep_element_to_json(&r.left));
    obj.insert("right".into(), rep_element_to_json(&r.right));
    obj.insert("equal".into(), json!(r.equal()));
    obj.insert("dimension".into(), json!(r.dimension().to_string()));
    Value::Object(obj)
}
