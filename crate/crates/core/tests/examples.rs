macro_rules! example {
    ($module:ident, $file:literal) => {
        #[path = $file]
        mod $module;

        #[test]
        fn $module() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(torsion_common_neighbor, "../examples/torsion_common_neighbor.rs");
example!(finite_diameter, "../examples/finite_diameter.rs");
example!(lattice_connectivity, "../examples/lattice_connectivity.rs");
example!(distance_sandwich, "../examples/distance_sandwich.rs");
example!(fibonacci_unbounded, "../examples/fibonacci_unbounded.rs");
example!(lazard_chains, "../examples/lazard_chains.rs");
example!(nielsen_reduction, "../examples/nielsen_reduction.rs");
example!(free_lift, "../examples/free_lift.rs");
example!(dot_export, "../examples/dot_export.rs");
example!(cli_driver, "../examples/cli_driver.rs");
