use super::Expr;

/// Canonical text for an expression. The output parses back to `ast.normalize()`.
pub fn print_expr(ast: &Expr) -> String {
    let mut out = String::new();
    write_sum_level(&ast.normalize(), &mut out);
    out
}

fn write_sum_level(e: &Expr, out: &mut String) {
    match e {
        Expr::Sum(terms) => {
            for (i, t) in terms.iter().enumerate() {
                match (i, t) {
                    (0, _) => write_term_level(t, out),
                    (_, Expr::Neg(inner)) => {
                        out.push_str(" - ");
                        write_term_level(inner, out);
                    }
                    _ => {
                        out.push_str(" + ");
                        write_term_level(t, out);
                    }
                }
            }
        }
        other => write_term_level(other, out),
    }
}

fn write_term_level(e: &Expr, out: &mut String) {
    match e {
        Expr::Sum(_) => parens(e, out),
        Expr::Product(factors) => {
            for (i, f) in factors.iter().enumerate() {
                if i > 0 {
                    out.push('*');
                }
                write_unary_level(f, out);
            }
        }
        other => write_unary_level(other, out),
    }
}

fn write_unary_level(e: &Expr, out: &mut String) {
    match e {
        Expr::Sum(_) | Expr::Product(_) => parens(e, out),
        Expr::Neg(inner) => {
            out.push('-');
            write_unary_level(inner, out);
        }
        Expr::Power(base, exp) => {
            let bare = match base.as_ref() {
                Expr::Generator(_) => true,
                Expr::Scalar(r) => r.is_integer(),
                _ => false,
            };
            if bare {
                write_unary_level(base, out);
            } else {
                parens(base, out);
            }
            out.push('^');
            out.push_str(&exp.to_string());
        }
        Expr::Scalar(r) => out.push_str(&r.to_string()),
        Expr::Generator(g) => out.push_str(g),
    }
}

fn parens(e: &Expr, out: &mut String) {
    out.push('(');
    write_sum_level(e, out);
    out.push(')');
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_expr;

    #[test]
    fn prints_linear_combination() {
        let e = Expr::Sum(vec![
            Expr::Product(vec![Expr::scalar(2), Expr::generator("H1")]),
            Expr::Product(vec![Expr::scalar(10), Expr::generator("H2")]),
        ]);
        assert_eq!(print_expr(&e), "2*H1 + 10*H2");
        assert_eq!(print_expr(&Expr::scalar(0)), "0");
    }

    #[test]
    fn canonical_forms_for_tricky_nodes() {
        let cases = [
            ("-(a*b)", "-(a*b)"),
            ("a - (b + c)", "a - (b + c)"),
            ("a + (b + c)", "a + b + c"),
            ("(3/2)^2", "(3/2)^2"),
            ("a*(b*c)", "a*b*c"),
            ("-E4^3", "-E4^3"),
            ("a - -b", "a - -b"),
            ("(-a)^2", "(-a)^2"),
            ("a*-b", "a*-b"),
            ("  ( H1 )  ", "H1"),
        ];
        for (src, want) in cases {
            let ast = parse_expr(src).unwrap();
            let printed = print_expr(&ast);
            assert_eq!(printed, want, "{src}");
            assert_eq!(parse_expr(&printed).unwrap(), ast.normalize(), "{src}");
        }
    }

    #[test]
    fn negative_scalar_payload() {
        let e = Expr::Product(vec![Expr::Scalar("-3/2".parse().unwrap()), Expr::generator("x")]);
        assert_eq!(print_expr(&e), "-3/2*x");
        assert_eq!(parse_expr("-3/2*x").unwrap(), e.normalize());
    }
}
