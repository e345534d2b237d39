package com.acme.shop.catalog;

public class CatalogIndex {
    private ProductSearch productSearch;

    public CatalogIndex(ProductSearch productSearch) {
        this.productSearch = productSearch;
    }

    public int indexSize() {
        return 42;
    }

    public ProductSearch productSearch() {
        return productSearch;
    }
}
