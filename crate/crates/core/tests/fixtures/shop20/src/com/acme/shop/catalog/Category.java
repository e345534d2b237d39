package com.acme.shop.catalog;

public class Category {
    private CatalogIndex catalogIndex;

    public Category(CatalogIndex catalogIndex) {
        this.catalogIndex = catalogIndex;
    }

    public int depth() {
        return 1;
    }

    public CatalogIndex catalogIndex() {
        return catalogIndex;
    }
}
