/// How the grossone symbol is rendered in text output.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Notation {
    /// `①`
    #[default]
    Unicode,
    /// `g1`, for terminals without the circled digit.
    Ascii,
}

impl Notation {
    pub fn symbol(self) -> &'static str {
        match self {
            Notation::Unicode => "①",
            Notation::Ascii => "g1",
        }
    }
}
