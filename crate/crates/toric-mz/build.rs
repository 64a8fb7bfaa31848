fn main() {
    // ndarray-linalg is used without a bundled LAPACK source; link the system
    // OpenBLAS, which provides the BLAS, CBLAS, and LAPACK symbols.
    println!("cargo:rustc-link-lib=dylib=openblas");
}
