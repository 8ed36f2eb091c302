//! `bound`, `region`, `b0` and `power`.

use std::fs;
use std::io::Write;

use varregion::ctc::{
    b0_root, common_tangent, gamma, gamma_curve, hull_boundary, phi_ctc, pointwise_region_h, psi_ctc, psi_minus_ctc,
    tangency, Frame,
};
use varregion::disk::{
    grunsky_region, marx_boundary, phi_s, phi_s_pointwise, phi_star, phi_star_full, psi_s, psi_star, MarxClass,
};
use varregion::extremal::psi_via_phi;
use varregion::polygon::BoundaryCurve;
use varregion::power::{power_bound, BoundKind, PowerExponent};
use varregion::{ExtendedReal, Sign};

use crate::number::render_extended;
use crate::output::{curve_to_csv, curve_to_svg};
use crate::record::{Bound, ClassTag, Functional, ResultRecord};
use crate::{B0Args, BoundArgs, CliError, Format, FrameArg, Kind, Method, PowerArgs, RegionArgs};

fn io_err(path: &std::path::Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io { path: path.to_path_buf(), source }
}

fn stdout_err(source: std::io::Error) -> CliError {
    CliError::Io { path: "<stdout>".into(), source }
}

fn emit(out: &mut dyn Write, rec: &ResultRecord, human: &str) -> Result<(), CliError> {
    writeln!(out, "{rec}").map_err(stdout_err)?;
    writeln!(out, "# {human}").map_err(stdout_err)
}

fn check_finite(name: &str, x: f64) -> Result<f64, CliError> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(CliError::Usage(format!("--{name} must be finite")))
    }
}

fn check_r(r: f64) -> Result<f64, CliError> {
    if (0.0..1.0).contains(&r) {
        Ok(r)
    } else {
        Err(CliError::Usage(format!("--r {r} outside [0, 1)")))
    }
}

fn marx(class: ClassTag) -> MarxClass {
    if class == ClassTag::Convex {
        MarxClass::Convex
    } else {
        MarxClass::Star
    }
}

fn sign_of(kind: Kind) -> Sign {
    match kind {
        Kind::Plus => Sign::Plus,
        Kind::Minus => Sign::Minus,
    }
}

pub fn bound_record(args: &BoundArgs) -> Result<ResultRecord, CliError> {
    let class = args.class;
    let r = args.r.map(check_r).transpose()?;
    if class == ClassTag::Ctc && r.is_some() {
        return Err(CliError::Usage("--class ctc has no pointwise closed form; drop --r".into()));
    }
    match (args.b, args.t) {
        (Some(b), None) => {
            let b = check_finite("b", b)?;
            let kind = args.kind.ok_or_else(|| CliError::Usage("--b requires --kind plus|minus".into()))?;
            let sign = sign_of(kind);
            let value: ExtendedReal = match (class, r) {
                (ClassTag::S, Some(r)) => phi_s_pointwise(r, b, sign)?.into(),
                (ClassTag::S, None) => phi_s(b, sign),
                (ClassTag::Star | ClassTag::Convex, Some(r)) => phi_star(r, b, sign, marx(class))?.into(),
                (ClassTag::Star | ClassTag::Convex, None) => phi_star_full(b, sign, marx(class)),
                (ClassTag::Ctc, _) => phi_ctc(b, sign),
            };
            let functional = if sign == Sign::Plus { Functional::PhiPlus } else { Functional::PhiMinus };
            let mut rec = ResultRecord::new(class, functional, value).param("b", b);
            if let Some(r) = r {
                rec = rec.param("r", r);
            }
            Ok(rec)
        }
        (None, Some(t)) => {
            let t = check_finite("t", t)?;
            if class == ClassTag::Ctc && args.kind == Some(Kind::Minus) {
                let v = psi_minus_ctc(t)?;
                return Ok(ResultRecord::new(class, Functional::PsiMinus, v.into()).param("t", t));
            }
            let value = match (class, r) {
                (ClassTag::S, Some(r)) => psi_s(r, t)?.into(),
                (ClassTag::S, None) => psi_via_phi(t, phi_s)?,
                (ClassTag::Star | ClassTag::Convex, Some(r)) => psi_star(r, t, marx(class))?.into(),
                (ClassTag::Star | ClassTag::Convex, None) => {
                    psi_via_phi(t, |b, sign| phi_star_full(b, sign, marx(class)))?
                }
                (ClassTag::Ctc, _) => psi_ctc(t)?,
            };
            let mut rec = ResultRecord::new(class, Functional::Psi, value).param("t", t);
            if let Some(r) = r {
                rec = rec.param("r", r);
            }
            Ok(rec)
        }
        _ => Err(CliError::Usage("give exactly one of --b and --t".into())),
    }
}

pub fn cmd_bound(args: &BoundArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let rec = bound_record(args)?;
    let what = match rec.functional {
        Functional::PhiPlus => "sup of Re w + b Im w",
        Functional::PhiMinus => "inf of Re w + b Im w",
        Functional::PsiMinus => "inf of Re(e^{it} w)",
        _ => "sup of Re(e^{it} w)",
    };
    let over = match args.r {
        Some(r) => format!("|z| = {r}"),
        None => "the whole disk".into(),
    };
    let human = format!("{what} over class {} at {over}: {}", rec.class.as_str(), render_extended(rec.value));
    emit(out, &rec, &human)
}

pub fn region_curve(args: &RegionArgs) -> Result<(BoundaryCurve, Vec<(num_complex::Complex64, num_complex::Complex64)>), CliError> {
    let n = args.samples;
    if n < 8 {
        return Err(CliError::Usage(format!("--samples {n} is below the minimum of 8")));
    }
    let need_r = || -> Result<f64, CliError> {
        let r = args.r.ok_or_else(|| CliError::Usage(format!("--class {} requires --r", args.class.as_str())))?;
        let r = check_r(r)?;
        if r == 0.0 {
            return Err(CliError::Usage("--r 0 gives a single point".into()));
        }
        Ok(r)
    };
    if args.class != ClassTag::Ctc && (args.pointwise || args.hull) {
        return Err(CliError::Usage("--pointwise and --hull apply to --class ctc only".into()));
    }
    let curve = match args.class {
        ClassTag::S => grunsky_region(need_r()?)?.boundary(n)?,
        ClassTag::Star | ClassTag::Convex => marx_boundary(need_r()?, marx(args.class), n)?,
        ClassTag::Ctc if args.pointwise => {
            if args.hull {
                return Err(CliError::Usage("--hull and --pointwise are exclusive".into()));
            }
            pointwise_region_h(need_r()?, n)?
        }
        ClassTag::Ctc => {
            let frame = if args.frame == FrameArg::W { Frame::W } else { Frame::Omega };
            if args.hull && args.format == Format::Csv {
                if n < 64 {
                    return Err(CliError::Usage("--hull needs --samples ≥ 64".into()));
                }
                hull_boundary(n, frame)?
            } else {
                gamma_curve(n, frame)?
            }
        }
    };
    let mut segments = vec![];
    if args.class == ClassTag::Ctc && args.hull && args.format == Format::Svg {
        let pair = tangency();
        let flip = if args.frame == FrameArg::W { -1.0 } else { 1.0 };
        for s in [1.0, -1.0] {
            let a = gamma(s * pair.u)? * flip;
            let b = gamma(s * pair.v)? * flip;
            segments.push((a, b));
        }
    }
    Ok((curve, segments))
}

pub fn cmd_region(args: &RegionArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let (curve, segments) = region_curve(args)?;
    let text = match args.format {
        Format::Csv => curve_to_csv(&curve),
        Format::Svg => curve_to_svg(&curve, &segments),
    };
    match &args.out {
        Some(path) => {
            fs::write(path, text).map_err(io_err(path))?;
            writeln!(out, "# wrote {} samples to {}", curve.len(), path.display()).map_err(stdout_err)
        }
        None => out.write_all(text.as_bytes()).map_err(stdout_err),
    }
}

pub fn b0_records(args: &B0Args) -> Result<Vec<ResultRecord>, CliError> {
    let tol = args.tol;
    if !(tol > 0.0 && tol < 1.0) {
        return Err(CliError::Usage(format!("--tol {tol} must lie in (0, 1)")));
    }
    let mut recs = vec![];
    if matches!(args.method, Method::Analytic | Method::Both) {
        let b = b0_root(tol)?;
        recs.push(ResultRecord::new(ClassTag::Ctc, Functional::B0, b.into()).with_method("analytic").param("tol", tol));
    }
    if matches!(args.method, Method::Geometric | Method::Both) {
        let pair = common_tangent(tol)?;
        recs.push(
            ResultRecord::new(ClassTag::Ctc, Functional::B0, pair.b0_geo.into())
                .with_method("geometric")
                .param("tol", tol)
                .param("u", pair.u)
                .param("v", pair.v),
        );
    }
    Ok(recs)
}

pub fn cmd_b0(args: &B0Args, out: &mut dyn Write) -> Result<(), CliError> {
    let recs = b0_records(args)?;
    for rec in &recs {
        writeln!(out, "{rec}").map_err(stdout_err)?;
    }
    let vals: Vec<f64> = recs.iter().map(|r| r.value.to_f64()).collect();
    let human = if vals.len() == 2 {
        format!("b0 = {} (analytic), {} (geometric), difference {:.3e}", vals[0], vals[1], (vals[0] - vals[1]).abs())
    } else {
        format!("b0 = {}", vals[0])
    };
    writeln!(out, "# {human}").map_err(stdout_err)
}

pub fn power_record(args: &PowerArgs) -> Result<ResultRecord, CliError> {
    let a = check_finite("a", args.a)?;
    let b = check_finite("b", args.b)?;
    if a == 0.0 {
        return Err(CliError::Usage(
            "--a 0 (purely imaginary exponent) is unsupported: no sharp bound is known for Re c = 0".into(),
        ));
    }
    let pb = power_bound(PowerExponent::new(a, b))?;
    let kind = if pb.kind == BoundKind::Infimum { Bound::Inf } else { Bound::Sup };
    Ok(ResultRecord::new(ClassTag::Ctc, Functional::Power, pb.value.into())
        .param("a", a)
        .param("b", b)
        .with_bound(kind))
}

pub fn cmd_power(args: &PowerArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let rec = power_record(args)?;
    let word = if rec.bound == Some(Bound::Inf) { "infimum" } else { "supremum" };
    let human = format!("{word} of log|f_c(z)/z| over close-to-convex f, c = {} + {}i: {}", args.a, args.b, render_extended(rec.value));
    emit(out, &rec, &human)
}
