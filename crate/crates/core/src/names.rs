//! Well-known identifiers used by the maintenance model.
//!
//! Encoding-scheme terms are written as resources: CLDType terms under the
//! `cldtype:` prefix (`cldtype:Catalogue`) and the mdm schemes (MDMCollType,
//! MDMFunctionType, MDMPeriodicity) under the `mdm:` prefix (`mdm:Storage`,
//! `mdm:Accrual`, `mdm:Monthly`).

use crate::graph::{ObjectValue, Prefix, ResourceId};

fn known(prefix: Prefix, local: &str) -> ResourceId {
    ResourceId::new(prefix, local).expect("well-known local names are valid")
}

pub fn dc_type() -> ResourceId {
    known(Prefix::Dc, "type")
}

pub fn dc_title() -> ResourceId {
    known(Prefix::Dc, "title")
}

pub fn dc_description() -> ResourceId {
    known(Prefix::Dc, "description")
}

pub fn cld_collection_description() -> ResourceId {
    known(Prefix::Cld, "collectionDescription")
}

pub fn cldtype_catalogue() -> ResourceId {
    known(Prefix::Cldtype, "Catalogue")
}

pub fn mdm_has_schema() -> ResourceId {
    known(Prefix::Mdm, "hasSchema")
}

pub fn mdm_follows_scheme() -> ResourceId {
    known(Prefix::Mdm, "followsScheme")
}

pub fn mdm_maintenance_function() -> ResourceId {
    known(Prefix::Mdm, "maintenanceFunction")
}

pub fn mdm_maint_periodicity() -> ResourceId {
    known(Prefix::Mdm, "maintPeriodicity")
}

pub fn dcterms_is_referenced_by() -> ResourceId {
    known(Prefix::Dcterms, "isReferencedBy")
}

pub fn mdm_is_engaged_via() -> ResourceId {
    known(Prefix::Mdm, "isEngagedVia")
}

pub fn mdm_administrator() -> ResourceId {
    known(Prefix::Mdm, "administrator")
}

pub fn mdm_contact() -> ResourceId {
    known(Prefix::Mdm, "contact")
}

pub fn dcterms_accrual_method() -> ResourceId {
    known(Prefix::Dcterms, "accrualMethod")
}

pub fn dcterms_accrual_periodicity() -> ResourceId {
    known(Prefix::Dcterms, "accrualPeriodicity")
}

/// An mdm encoding-scheme term as a resource, e.g. `mdm:Monthly`.
pub fn mdm_term(local: &str) -> ResourceId {
    known(Prefix::Mdm, local)
}

/// A CLDType term as a resource, e.g. `cldtype:CollectionImage`.
pub fn cldtype_term(local: &str) -> ResourceId {
    known(Prefix::Cldtype, local)
}

/// Typing statement object for catalogs.
pub fn catalogue_type() -> ObjectValue {
    ObjectValue::Resource(cldtype_catalogue())
}
