use proptest::prelude::*;
use z2z4::{MixedVector, Z2Z4Code};
use z2z4_cli::{parse_code_file, print_code_file};

fn code() -> impl Strategy<Value = Z2Z4Code> {
    (0usize..=6, 0usize..=6).prop_flat_map(|(alpha, beta)| {
        prop::collection::vec(
            (
                prop::collection::vec(0u8..2, alpha),
                prop::collection::vec(0u8..4, beta),
            ),
            0..=6,
        )
        .prop_map(move |rows| {
            let rows = rows
                .iter()
                .map(|(x, y)| MixedVector::from_digits(x, y).unwrap())
                .collect();
            Z2Z4Code::new(alpha, beta, rows).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn print_then_parse(c in code()) {
        let text = print_code_file(&c);
        let parsed = parse_code_file(&text).unwrap();
        prop_assert!(parsed.equals(&c).unwrap());
        if c.length() > 0 {
            prop_assert_eq!(parsed.generators(), c.generators());
        }
        prop_assert_eq!(print_code_file(&parsed), text);
    }

    #[test]
    fn comments_and_spacing_are_ignored(c in code()) {
        let text = print_code_file(&c);
        let noisy: String = text
            .lines()
            .flat_map(|l| ["# noise".to_string(), String::new(), format!("  {}  ", l.replace(' ', ""))])
            .collect::<Vec<_>>()
            .join("\n");
        prop_assert!(parse_code_file(&noisy).unwrap().equals(&c).unwrap());
    }
}
