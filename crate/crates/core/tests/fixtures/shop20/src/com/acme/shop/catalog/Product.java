package com.acme.shop.catalog;

public class Product {
    private Category category;
    private PriceTag priceTag;

    public Product(Category category, PriceTag priceTag) {
        this.category = category;
        this.priceTag = priceTag;
    }

    public int stockLevel() {
        return 3;
    }

    public Category category() {
        return category;
    }
}
