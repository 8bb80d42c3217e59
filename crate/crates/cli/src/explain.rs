//! What each task computes, as formulas.

pub fn explain(task: &str) -> Option<&'static str> {
    Some(match task {
        "d2" => {
            "d2: depth two quasibases.
  left:  a ⊗ a' = Σ_i t_i β_i(a) a'   with t_i ∈ (A ⊗_B A)^B, β_i ∈ End_{B-B}(A)
  right: a ⊗ a' = Σ_j a γ_j(a') u_j   with u_j ∈ (A ⊗_B A)^B, γ_j ∈ End_{B-B}(A)
Both identities are checked on every pair of basis elements. With a
Hopf-Galois coaction, the quasibasis u_i = g_i⁻¹ ⊗ g_i built from the Galois
map is checked too."
        }
        "bialgebroids" => {
            "bialgebroids: S = End_{B-B}(A) and T = (A ⊗_B A)^B over R = C_A(B).
  S: s(r)(a) = r a,  t(r)(a) = a r,  ε(α) = α(1),
     Δ(α) = Σ_i α(-t_i¹) t_i² ⊗ β_i = Σ_j γ_j ⊗ u_j¹ α(u_j² -)
  T: tt' = t'¹t¹ ⊗ t²t'²,  s(r) = 1 ⊗ r,  t(r) = r ⊗ 1,  ε(t) = t¹t²,
     Δ(t) = Σ_i t_i ⊗ (β_i(t¹) ⊗ t²) = Σ_j (t¹ ⊗ γ_j(t²)) ⊗ u_j
Checks every left/right bialgebroid axiom up to verify_limit, that both Δ
formulas agree, the Lu form of each structure, the smash product
iso A ⋊ S ≅ End(A_B), a ⊗ α ↦ λ_a α, and that S measures A."
        }
        "hopf-galois" => {
            "hopf-galois: a right H-comodule algebra A with B = A^coH.
  β(a ⊗ a') = a a'₍₀₎ ⊗ a'₍₁₎ is bijective A ⊗_B A → A ⊗ H
  Miyashita-Ulbrich action r ◁ h = β⁻¹(1 ⊗ h)¹ r β⁻¹(1 ⊗ h)²
  Yetter-Drinfeld: ρ(r ◁ h) = (r₍₀₎ ◁ h₍₂₎) ⊗ S(h₍₁₎) r₍₁₎ h₍₃₎
  Φ: S ≅ R ⋊ H*  and  β|_T: T^op ≅ R ⋊ H^op
  Drinfeld double of H^op with its commutation relation and R-matrix."
        }
        "lu-antipode" => {
            "lu-antipode: Lu's Hopf algebroid on R ⋊ H^op transported to T^op.
  τ(r ⋊ h) = (1 ⋊ S̄h)(r₍₀₎ ◁ S̄²r₍₁₎)₍₀₎ ⋊ (r₍₀₎ ◁ S̄²r₍₁₎)₍₁₎,  S̄ = S⁻¹
Checks the closed form against Lu's construction and the three Hopf
algebroid axioms: τ anti-multiplicative with τ t = s, μ(τ ⊗ id)Δ = t ε τ,
and μ(id ⊗ τ) γ Δ = s ε for a section γ of H ⊗ H → H ⊗_R H."
        }
        "coring-correspondence" => {
            "coring-correspondence: properties of A/B against the S- and T-corings.
  separable (e ∈ (A ⊗_B A)^A, e¹e² = 1)  ⟹  S has a cointegral
  split (E: A → B bimodule, E(1) = 1)    ⟺  S cosplit (with C_A(C_A(B)) = B)
  Frobenius (E, x_i, y_i)                 ⟺  T Frobenius (progenerator, Procesi)
Each constructive direction builds the conclusion from the premise and
re-verifies it; other directions compare independent searches."
        }
        "hsep" => {
            "hsep: H-separability system Σ_i r_i e_i = 1 ⊗ 1, r_i ∈ R, e_i ∈ (A ⊗_B A)^A.
  R is f.g. projective over Z with dual basis f_i(r) = e_i¹ r e_i²
  A ⊗_Z R^op ≅ End(A_B),  R ⊗_Z R^op ≅ S,  A ⊗_B A ≅ Hom_Z(R, A),  T^op ≅ End_Z(R)
  H-separable and A_B balanced ⟹ C_A(C_A(B)) = B
For each intermediate D: H = End_{D-D}(A) is a Hopf algebroid over
V = C_A(D), a sub-bialgebroid of S generated by s(V)t(V), and A^H = D."
        }
        "sugano" => {
            "sugano: A simple, C_A(C_A(B)) = B and R simple  ⟺  A/B H-separable and A_B f.g. projective.
For each intermediate D: V = C_A(D) is simple, C_A(V) = D, A/D is
H-separable, and C_A(C_A(V)) = V."
        }
        _ => return None,
    })
}
